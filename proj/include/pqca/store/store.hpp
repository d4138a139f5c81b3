#pragma once

#include "pqca/auth/token_store.hpp"
#include "pqca/common/bytes.hpp"
#include "pqca/common/clock.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

struct sqlite3;

namespace pqca::store {

enum class EntityRole { intermediate, end_entity };
enum class EntityStatus { registered, enrolled, certified, blacklisted };

std::string_view to_string(EntityRole role) noexcept;
std::string_view to_string(EntityStatus status) noexcept;

struct EntityRecord {
    std::string entity_id;
    std::string credentials_digest;
    EntityRole role = EntityRole::end_entity;
    EntityStatus status = EntityStatus::registered;
    std::optional<Timestamp> pending_upload_deadline;
    // Root anchor this entity's lineage is bound to (root layer only).
    std::string anchor_id;
    // Assigned by the store on insert; unique per store.
    std::int64_t lineage_number = 0;
    std::string common_name;
    std::string organization;
};

struct CertificateRecord {
    std::string lineage_id;
    std::uint64_t serial = 0;
    std::string subject_entity_id;
    std::string pem;
    Timestamp issued_at{};
    bool uploaded = false;
};

/// A signing identity: a root anchor, or an ICA's own certificate.
struct AnchorRecord {
    std::string anchor_id;
    std::string pem;
    std::string algorithm;
    Timestamp created_at{};
    Bytes secret_key;
    // Full chain, leaf first, as concatenated PEM (ICA identities).
    std::string chain_pem;
    bool is_current = false;
};

class store_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class duplicate_key : public store_error {
    using store_error::store_error;
};
class missing_row : public store_error {
    using store_error::store_error;
};

/// Embedded transactional store for one service layer. Every public call is
/// atomic and linearizable; `transaction` groups several calls into one.
class Store final : public auth::TokenRepository {
  public:
    /// `path` may be ":memory:".
    explicit Store(const std::string &path);
    ~Store() override;
    Store(const Store &) = delete;
    Store &operator=(const Store &) = delete;

    void transaction(const std::function<void()> &body);

    // entities
    void put_entity(EntityRecord record);
    [[nodiscard]] std::optional<EntityRecord> get_entity(std::string_view entity_id);
    void update_entity(const EntityRecord &record);
    [[nodiscard]] std::vector<EntityRecord> list_entities();

    // certificates
    void put_certificate(const CertificateRecord &record);
    [[nodiscard]] std::optional<CertificateRecord> get_certificate(std::string_view lineage_id, std::uint64_t serial);
    [[nodiscard]] std::vector<CertificateRecord> list_certificates();
    [[nodiscard]] std::vector<CertificateRecord> list_certificates(std::string_view lineage_id);
    [[nodiscard]] std::optional<CertificateRecord> find_pending_upload(std::string_view entity_id,
                                                                       std::string_view pem);
    void mark_uploaded(std::string_view lineage_id, std::uint64_t serial);

    /// Strictly increasing per lineage, starting at 1.
    std::uint64_t next_serial(std::string_view lineage_id);

    /// Blacklists every entity whose upload deadline passed with an issued
    /// certificate still not uploaded; returns their ids.
    std::vector<std::string> sweep_expired(Timestamp now);

    // anchors
    /// Inserts `record` as the current anchor; older anchors stay.
    void put_anchor(const AnchorRecord &record);
    [[nodiscard]] std::optional<AnchorRecord> current_anchor();
    [[nodiscard]] std::optional<AnchorRecord> get_anchor(std::string_view anchor_id);
    [[nodiscard]] std::vector<AnchorRecord> list_anchors();

    // tokens
    void insert_token(const auth::SessionToken &token) override;
    std::optional<auth::TokenRecord> find_token(std::string_view token_id) override;
    void mark_token_expired(std::string_view token_id) override;
    [[nodiscard]] std::size_t token_count();

    /// All issued certificates, issuance order, as one PEM bundle.
    std::string export_pem_bundle();

  private:
    void exec(const char *sql);

    sqlite3 *db_ = nullptr;
    std::recursive_mutex mutex_;
};

}  // namespace pqca::store
