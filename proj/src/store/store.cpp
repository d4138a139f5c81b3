#include "pqca/store/store.hpp"

#include <sqlite3.h>

#include <memory>

namespace pqca::store {

std::string_view to_string(EntityRole role) noexcept {
    return role == EntityRole::intermediate ? "intermediate" : "end-entity";
}

std::string_view to_string(EntityStatus status) noexcept {
    switch (status) {
    case EntityStatus::registered:
        return "registered";
    case EntityStatus::enrolled:
        return "enrolled";
    case EntityStatus::certified:
        return "certified";
    case EntityStatus::blacklisted:
        return "blacklisted";
    }
    return "?";
}

namespace {

EntityRole role_from(std::string_view text) {
    if (text == "intermediate") return EntityRole::intermediate;
    if (text == "end-entity") return EntityRole::end_entity;
    throw store_error("corrupt entity role: " + std::string(text));
}

EntityStatus status_from(std::string_view text) {
    if (text == "registered") return EntityStatus::registered;
    if (text == "enrolled") return EntityStatus::enrolled;
    if (text == "certified") return EntityStatus::certified;
    if (text == "blacklisted") return EntityStatus::blacklisted;
    throw store_error("corrupt entity status: " + std::string(text));
}

constexpr const char *schema = R"sql(
CREATE TABLE IF NOT EXISTS entities (
    entity_id TEXT PRIMARY KEY,
    credentials_digest TEXT NOT NULL,
    role TEXT NOT NULL,
    status TEXT NOT NULL,
    pending_upload_deadline INTEGER,
    anchor_id TEXT NOT NULL DEFAULT '',
    lineage_number INTEGER NOT NULL UNIQUE,
    common_name TEXT NOT NULL DEFAULT '',
    organization TEXT NOT NULL DEFAULT ''
);
CREATE TABLE IF NOT EXISTS certificates (
    issuer_lineage_id TEXT NOT NULL,
    serial INTEGER NOT NULL,
    subject_entity_id TEXT NOT NULL,
    pem TEXT NOT NULL,
    issued_at INTEGER NOT NULL,
    uploaded INTEGER NOT NULL DEFAULT 0,
    PRIMARY KEY (issuer_lineage_id, serial)
);
CREATE INDEX IF NOT EXISTS certificates_by_subject ON certificates (subject_entity_id, uploaded);
CREATE TABLE IF NOT EXISTS serial_counters (
    lineage_id TEXT PRIMARY KEY,
    last_serial INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS tokens (
    token_id TEXT PRIMARY KEY,
    entity_id TEXT NOT NULL,
    scope TEXT NOT NULL,
    issued_at INTEGER NOT NULL,
    expires_at INTEGER NOT NULL,
    expired INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE IF NOT EXISTS anchors (
    seq INTEGER PRIMARY KEY AUTOINCREMENT,
    anchor_id TEXT NOT NULL UNIQUE,
    pem TEXT NOT NULL,
    algorithm TEXT NOT NULL,
    created_at INTEGER NOT NULL,
    secret_key BLOB NOT NULL,
    chain_pem TEXT NOT NULL DEFAULT '',
    is_current INTEGER NOT NULL DEFAULT 0
);
)sql";

class Statement {
  public:
    Statement(sqlite3 *db, const char *sql) : db_(db) {
        if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
            throw store_error(std::string("prepare failed: ") + sqlite3_errmsg(db));
        }
    }
    ~Statement() { sqlite3_finalize(stmt_); }
    Statement(const Statement &) = delete;
    Statement &operator=(const Statement &) = delete;

    Statement &bind(int index, std::string_view text) {
        check(sqlite3_bind_text(stmt_, index, text.data(), static_cast<int>(text.size()), SQLITE_TRANSIENT));
        return *this;
    }
    Statement &bind(int index, std::int64_t value) {
        check(sqlite3_bind_int64(stmt_, index, value));
        return *this;
    }
    Statement &bind(int index, ByteView blob) {
        check(sqlite3_bind_blob(stmt_, index, blob.data(), static_cast<int>(blob.size()), SQLITE_TRANSIENT));
        return *this;
    }
    Statement &bind_null(int index) {
        check(sqlite3_bind_null(stmt_, index));
        return *this;
    }

    /// True while a row is available.
    bool step() {
        const int rc = sqlite3_step(stmt_);
        if (rc == SQLITE_ROW) {
            return true;
        }
        if (rc == SQLITE_DONE) {
            return false;
        }
        if (rc == SQLITE_CONSTRAINT) {
            throw duplicate_key(sqlite3_errmsg(db_));
        }
        throw store_error(std::string("step failed: ") + sqlite3_errmsg(db_));
    }
    void run() { step(); }

    std::string text(int col) const {
        const auto *p = sqlite3_column_text(stmt_, col);
        return p ? std::string(reinterpret_cast<const char *>(p), static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
                 : std::string();
    }
    std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }
    bool is_null(int col) const { return sqlite3_column_type(stmt_, col) == SQLITE_NULL; }
    Bytes blob(int col) const {
        const auto *p = static_cast<const std::uint8_t *>(sqlite3_column_blob(stmt_, col));
        return p ? Bytes(p, p + sqlite3_column_bytes(stmt_, col)) : Bytes{};
    }

  private:
    void check(int rc) const {
        if (rc != SQLITE_OK) {
            throw store_error(std::string("bind failed: ") + sqlite3_errmsg(db_));
        }
    }

    sqlite3 *db_;
    sqlite3_stmt *stmt_ = nullptr;
};

EntityRecord read_entity(const Statement &s) {
    EntityRecord r;
    r.entity_id = s.text(0);
    r.credentials_digest = s.text(1);
    r.role = role_from(s.text(2));
    r.status = status_from(s.text(3));
    if (!s.is_null(4)) {
        r.pending_upload_deadline = from_unix(s.integer(4));
    }
    r.anchor_id = s.text(5);
    r.lineage_number = s.integer(6);
    r.common_name = s.text(7);
    r.organization = s.text(8);
    return r;
}

constexpr const char *entity_columns =
    "entity_id, credentials_digest, role, status, pending_upload_deadline, anchor_id, lineage_number, common_name, "
    "organization";

CertificateRecord read_certificate(const Statement &s) {
    return CertificateRecord{s.text(0), static_cast<std::uint64_t>(s.integer(1)), s.text(2), s.text(3),
                             from_unix(s.integer(4)), s.integer(5) != 0};
}

constexpr const char *certificate_columns = "issuer_lineage_id, serial, subject_entity_id, pem, issued_at, uploaded";

AnchorRecord read_anchor(const Statement &s) {
    return AnchorRecord{s.text(0), s.text(1), s.text(2), from_unix(s.integer(3)), s.blob(4), s.text(5),
                        s.integer(6) != 0};
}

constexpr const char *anchor_columns = "anchor_id, pem, algorithm, created_at, secret_key, chain_pem, is_current";

std::string sql(std::string_view a, std::string_view b, std::string_view c = {}) {
    std::string out(a);
    out.append(b).append(c);
    return out;
}

}  // namespace

Store::Store(const std::string &path) {
    if (sqlite3_open_v2(path.c_str(), &db_, SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_NOMUTEX,
                        nullptr) != SQLITE_OK) {
        std::string message = db_ ? sqlite3_errmsg(db_) : "out of memory";
        sqlite3_close(db_);
        throw store_error("cannot open store " + path + ": " + message);
    }
    sqlite3_busy_timeout(db_, 5000);
    if (path != ":memory:") {
        exec("PRAGMA journal_mode=WAL;");
        exec("PRAGMA synchronous=NORMAL;");
    }
    exec(schema);
}

Store::~Store() { sqlite3_close(db_); }

void Store::exec(const char *statement) {
    char *error = nullptr;
    if (sqlite3_exec(db_, statement, nullptr, nullptr, &error) != SQLITE_OK) {
        std::string message = error ? error : "unknown error";
        sqlite3_free(error);
        throw store_error("exec failed: " + message);
    }
}

void Store::transaction(const std::function<void()> &body) {
    std::lock_guard lock(mutex_);
    if (!sqlite3_get_autocommit(db_)) {
        // Already inside a transaction on this thread.
        body();
        return;
    }
    exec("BEGIN IMMEDIATE;");
    try {
        body();
        exec("COMMIT;");
    } catch (...) {
        exec("ROLLBACK;");
        throw;
    }
}

void Store::put_entity(EntityRecord record) {
    std::lock_guard lock(mutex_);
    transaction([&] {
        Statement next(db_, "SELECT COALESCE(MAX(lineage_number), 0) + 1 FROM entities");
        next.step();
        record.lineage_number = next.integer(0);
        Statement s(db_, sql("INSERT INTO entities (", entity_columns, ") VALUES (?,?,?,?,?,?,?,?,?)").c_str());
        s.bind(1, record.entity_id).bind(2, record.credentials_digest).bind(3, to_string(record.role));
        s.bind(4, to_string(record.status));
        if (record.pending_upload_deadline) {
            s.bind(5, to_unix(*record.pending_upload_deadline));
        } else {
            s.bind_null(5);
        }
        s.bind(6, record.anchor_id).bind(7, record.lineage_number).bind(8, record.common_name);
        s.bind(9, record.organization);
        try {
            s.run();
        } catch (const duplicate_key &) {
            throw duplicate_key("entity already exists: " + record.entity_id);
        }
    });
}

std::optional<EntityRecord> Store::get_entity(std::string_view entity_id) {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", entity_columns, " FROM entities WHERE entity_id = ?").c_str());
    s.bind(1, entity_id);
    if (!s.step()) {
        return std::nullopt;
    }
    return read_entity(s);
}

void Store::update_entity(const EntityRecord &record) {
    std::lock_guard lock(mutex_);
    Statement s(db_, "UPDATE entities SET credentials_digest = ?, role = ?, status = ?, pending_upload_deadline = ?, "
                     "anchor_id = ?, common_name = ?, organization = ? WHERE entity_id = ?");
    s.bind(1, record.credentials_digest).bind(2, to_string(record.role)).bind(3, to_string(record.status));
    if (record.pending_upload_deadline) {
        s.bind(4, to_unix(*record.pending_upload_deadline));
    } else {
        s.bind_null(4);
    }
    s.bind(5, record.anchor_id).bind(6, record.common_name).bind(7, record.organization).bind(8, record.entity_id);
    s.run();
    if (sqlite3_changes(db_) == 0) {
        throw missing_row("no such entity: " + record.entity_id);
    }
}

std::vector<EntityRecord> Store::list_entities() {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", entity_columns, " FROM entities ORDER BY lineage_number").c_str());
    std::vector<EntityRecord> out;
    while (s.step()) {
        out.push_back(read_entity(s));
    }
    return out;
}

void Store::put_certificate(const CertificateRecord &record) {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("INSERT INTO certificates (", certificate_columns, ") VALUES (?,?,?,?,?,?)").c_str());
    s.bind(1, record.lineage_id).bind(2, static_cast<std::int64_t>(record.serial)).bind(3, record.subject_entity_id);
    s.bind(4, record.pem).bind(5, to_unix(record.issued_at)).bind(6, std::int64_t{record.uploaded ? 1 : 0});
    try {
        s.run();
    } catch (const duplicate_key &) {
        throw duplicate_key("certificate (" + record.lineage_id + ", " + std::to_string(record.serial) +
                            ") already exists");
    }
}

std::optional<CertificateRecord> Store::get_certificate(std::string_view lineage_id, std::uint64_t serial) {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", certificate_columns, " FROM certificates WHERE issuer_lineage_id = ? AND serial = ?")
                         .c_str());
    s.bind(1, lineage_id).bind(2, static_cast<std::int64_t>(serial));
    if (!s.step()) {
        return std::nullopt;
    }
    return read_certificate(s);
}

std::vector<CertificateRecord> Store::list_certificates() {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", certificate_columns, " FROM certificates ORDER BY rowid").c_str());
    std::vector<CertificateRecord> out;
    while (s.step()) {
        out.push_back(read_certificate(s));
    }
    return out;
}

std::vector<CertificateRecord> Store::list_certificates(std::string_view lineage_id) {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", certificate_columns,
                         " FROM certificates WHERE issuer_lineage_id = ? ORDER BY serial")
                         .c_str());
    s.bind(1, lineage_id);
    std::vector<CertificateRecord> out;
    while (s.step()) {
        out.push_back(read_certificate(s));
    }
    return out;
}

std::optional<CertificateRecord> Store::find_pending_upload(std::string_view entity_id, std::string_view pem) {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", certificate_columns,
                         " FROM certificates WHERE subject_entity_id = ? AND pem = ? AND uploaded = 0 LIMIT 1")
                         .c_str());
    s.bind(1, entity_id).bind(2, pem);
    if (!s.step()) {
        return std::nullopt;
    }
    return read_certificate(s);
}

void Store::mark_uploaded(std::string_view lineage_id, std::uint64_t serial) {
    std::lock_guard lock(mutex_);
    Statement s(db_, "UPDATE certificates SET uploaded = 1 WHERE issuer_lineage_id = ? AND serial = ? AND uploaded = 0");
    s.bind(1, lineage_id).bind(2, static_cast<std::int64_t>(serial));
    s.run();
    if (sqlite3_changes(db_) == 0) {
        throw missing_row("no pending certificate (" + std::string(lineage_id) + ", " + std::to_string(serial) + ")");
    }
}

std::uint64_t Store::next_serial(std::string_view lineage_id) {
    std::lock_guard lock(mutex_);
    std::uint64_t serial = 0;
    transaction([&] {
        Statement bump(db_, "INSERT INTO serial_counters (lineage_id, last_serial) VALUES (?, 1) "
                            "ON CONFLICT(lineage_id) DO UPDATE SET last_serial = last_serial + 1");
        bump.bind(1, lineage_id).run();
        Statement read(db_, "SELECT last_serial FROM serial_counters WHERE lineage_id = ?");
        read.bind(1, lineage_id);
        read.step();
        serial = static_cast<std::uint64_t>(read.integer(0));
    });
    return serial;
}

std::vector<std::string> Store::sweep_expired(Timestamp now) {
    std::lock_guard lock(mutex_);
    std::vector<std::string> blacklisted;
    transaction([&] {
        Statement select(db_, "SELECT e.entity_id FROM entities e WHERE e.pending_upload_deadline IS NOT NULL "
                              "AND e.pending_upload_deadline < ? AND e.status != 'blacklisted' AND EXISTS ("
                              "SELECT 1 FROM certificates c WHERE c.subject_entity_id = e.entity_id AND c.uploaded = 0) "
                              "ORDER BY e.lineage_number");
        select.bind(1, to_unix(now));
        while (select.step()) {
            blacklisted.push_back(select.text(0));
        }
        for (const auto &id : blacklisted) {
            Statement update(db_, "UPDATE entities SET status = 'blacklisted', pending_upload_deadline = NULL "
                                  "WHERE entity_id = ?");
            update.bind(1, id).run();
        }
    });
    return blacklisted;
}

void Store::put_anchor(const AnchorRecord &record) {
    std::lock_guard lock(mutex_);
    transaction([&] {
        exec("UPDATE anchors SET is_current = 0;");
        Statement s(db_, sql("INSERT INTO anchors (", anchor_columns, ") VALUES (?,?,?,?,?,?,1)").c_str());
        s.bind(1, record.anchor_id).bind(2, record.pem).bind(3, record.algorithm).bind(4, to_unix(record.created_at));
        s.bind(5, ByteView(record.secret_key)).bind(6, record.chain_pem);
        try {
            s.run();
        } catch (const duplicate_key &) {
            throw duplicate_key("anchor already exists: " + record.anchor_id);
        }
    });
}

std::optional<AnchorRecord> Store::current_anchor() {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", anchor_columns, " FROM anchors WHERE is_current = 1").c_str());
    if (!s.step()) {
        return std::nullopt;
    }
    return read_anchor(s);
}

std::optional<AnchorRecord> Store::get_anchor(std::string_view anchor_id) {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", anchor_columns, " FROM anchors WHERE anchor_id = ?").c_str());
    s.bind(1, anchor_id);
    if (!s.step()) {
        return std::nullopt;
    }
    return read_anchor(s);
}

std::vector<AnchorRecord> Store::list_anchors() {
    std::lock_guard lock(mutex_);
    Statement s(db_, sql("SELECT ", anchor_columns, " FROM anchors ORDER BY seq").c_str());
    std::vector<AnchorRecord> out;
    while (s.step()) {
        out.push_back(read_anchor(s));
    }
    return out;
}

void Store::insert_token(const auth::SessionToken &token) {
    std::lock_guard lock(mutex_);
    Statement s(db_, "INSERT INTO tokens (token_id, entity_id, scope, issued_at, expires_at) VALUES (?,?,?,?,?)");
    s.bind(1, token.token_id).bind(2, token.entity_id).bind(3, auth::to_string(token.scope));
    s.bind(4, to_unix(token.issued_at)).bind(5, to_unix(token.expires_at));
    s.run();
}

std::optional<auth::TokenRecord> Store::find_token(std::string_view token_id) {
    std::lock_guard lock(mutex_);
    Statement s(db_, "SELECT token_id, entity_id, scope, issued_at, expires_at, expired FROM tokens WHERE token_id = ?");
    s.bind(1, token_id);
    if (!s.step()) {
        return std::nullopt;
    }
    auto scope = auth::scope_from_string(s.text(2));
    if (!scope) {
        throw store_error("corrupt token scope");
    }
    return auth::TokenRecord{{s.text(0), s.text(1), *scope, from_unix(s.integer(3)), from_unix(s.integer(4))},
                             s.integer(5) != 0};
}

void Store::mark_token_expired(std::string_view token_id) {
    std::lock_guard lock(mutex_);
    Statement s(db_, "UPDATE tokens SET expired = 1 WHERE token_id = ?");
    s.bind(1, token_id).run();
}

std::size_t Store::token_count() {
    std::lock_guard lock(mutex_);
    Statement s(db_, "SELECT COUNT(*) FROM tokens");
    s.step();
    return static_cast<std::size_t>(s.integer(0));
}

std::string Store::export_pem_bundle() {
    std::string bundle;
    for (const auto &record : list_certificates()) {
        bundle += record.pem;
    }
    return bundle;
}

}  // namespace pqca::store
