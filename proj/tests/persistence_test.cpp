#include "pqca/store/credentials.hpp"
#include "pqca/store/store.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <thread>

using namespace pqca;
using namespace pqca::store;
using namespace std::chrono_literals;

namespace {
const Timestamp t0 = from_unix(1'700'000'000);

EntityRecord entity(std::string id, EntityRole role = EntityRole::end_entity) {
    EntityRecord r;
    r.entity_id = std::move(id);
    r.credentials_digest = "digest";
    r.role = role;
    r.status = EntityStatus::enrolled;
    r.common_name = r.entity_id;
    return r;
}

std::filesystem::path temp_db(const std::string &name) {
    auto path = std::filesystem::temp_directory_path() / ("pqca-" + name + "-" + std::to_string(::getpid()) + ".db");
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + "-wal");
    std::filesystem::remove(path.string() + "-shm");
    return path;
}
}  // namespace

TEST(Store, EntityCrud) {
    Store db(":memory:");
    db.put_entity(entity("ee-1"));
    db.put_entity(entity("ee-2"));
    EXPECT_THROW(db.put_entity(entity("ee-1")), duplicate_key);

    auto got = db.get_entity("ee-1");
    ASSERT_TRUE(got);
    EXPECT_EQ(got->status, EntityStatus::enrolled);
    EXPECT_FALSE(got->pending_upload_deadline);
    EXPECT_NE(got->lineage_number, db.get_entity("ee-2")->lineage_number);

    got->status = EntityStatus::certified;
    got->pending_upload_deadline = t0;
    db.update_entity(*got);
    EXPECT_EQ(db.get_entity("ee-1")->status, EntityStatus::certified);
    EXPECT_EQ(db.get_entity("ee-1")->pending_upload_deadline, t0);

    EXPECT_FALSE(db.get_entity("nobody"));
    EXPECT_THROW(db.update_entity(entity("nobody")), missing_row);
    EXPECT_EQ(db.list_entities().size(), 2u);
}

TEST(Store, ConcurrentNextSerialIsGapFreeAndUnique) {
    Store db(":memory:");
    std::mutex mutex;
    std::vector<std::uint64_t> serials;
    std::vector<std::thread> threads;
    for (int t = 0; t < 100; ++t) {
        threads.emplace_back([&] {
            const auto s = db.next_serial("ica-1");
            std::lock_guard lock(mutex);
            serials.push_back(s);
        });
    }
    for (auto &th : threads) th.join();
    const std::set<std::uint64_t> unique(serials.begin(), serials.end());
    ASSERT_EQ(unique.size(), 100u);
    EXPECT_EQ(*unique.begin(), 1u);
    EXPECT_EQ(*unique.rbegin(), 100u);
    // Other lineages have their own counters.
    EXPECT_EQ(db.next_serial("ica-2"), 1u);
    EXPECT_EQ(db.next_serial("ica-1"), 101u);
}

TEST(Store, CertificatesAreKeyedByLineageAndSerial) {
    Store db(":memory:");
    db.put_certificate({"ica-1", 1, "ee-1", "PEM-A", t0, false});
    db.put_certificate({"ica-2", 1, "ee-2", "PEM-B", t0, false});
    EXPECT_THROW(db.put_certificate({"ica-1", 1, "ee-3", "PEM-C", t0, false}), duplicate_key);

    const auto lineage1 = db.list_certificates("ica-1");
    ASSERT_EQ(lineage1.size(), 1u);
    EXPECT_EQ(lineage1[0].subject_entity_id, "ee-1");
    EXPECT_EQ(db.list_certificates("ica-2")[0].pem, "PEM-B");

    auto pending = db.find_pending_upload("ee-1", "PEM-A");
    ASSERT_TRUE(pending);
    EXPECT_FALSE(db.find_pending_upload("ee-1", "PEM-B"));
    db.mark_uploaded(pending->lineage_id, pending->serial);
    EXPECT_TRUE(db.get_certificate("ica-1", 1)->uploaded);
    EXPECT_FALSE(db.find_pending_upload("ee-1", "PEM-A"));
    EXPECT_THROW(db.mark_uploaded("ica-1", 1), missing_row);
}

TEST(Store, SweepBlacklistsOnlyOverdueUnuploaded) {
    Store db(":memory:");
    EXPECT_TRUE(db.sweep_expired(t0).empty());

    auto late = entity("late");
    late.pending_upload_deadline = t0 + 60s;
    db.put_entity(late);
    db.put_certificate({"ica-1", 1, "late", "PEM-late", t0, false});

    auto punctual = entity("punctual");
    punctual.pending_upload_deadline = t0 + 60s;
    db.put_entity(punctual);
    db.put_certificate({"ica-1", 2, "punctual", "PEM-punctual", t0, true});

    auto fresh = entity("fresh");
    fresh.pending_upload_deadline = t0 + 120s;
    db.put_entity(fresh);
    db.put_certificate({"ica-1", 3, "fresh", "PEM-fresh", t0, false});

    EXPECT_TRUE(db.sweep_expired(t0 + 60s).empty());
    EXPECT_EQ(db.sweep_expired(t0 + 61s), std::vector<std::string>{"late"});
    EXPECT_EQ(db.get_entity("late")->status, EntityStatus::blacklisted);
    EXPECT_EQ(db.get_entity("punctual")->status, EntityStatus::enrolled);
    EXPECT_EQ(db.get_entity("fresh")->status, EntityStatus::enrolled);
    // Already blacklisted entities are not reported twice.
    EXPECT_EQ(db.sweep_expired(t0 + 121s), std::vector<std::string>{"fresh"});
}

TEST(Store, AnchorsKeepHistoryWithOneCurrent) {
    Store db(":memory:");
    EXPECT_FALSE(db.current_anchor());
    db.put_anchor({"a1", "PEM1", "rsa2048-sha256", t0, {1, 2}, "", false});
    db.put_anchor({"a2", "PEM2", "Dilithium3", t0 + 1s, {3}, "", false});
    EXPECT_EQ(db.current_anchor()->anchor_id, "a2");
    const auto all = db.list_anchors();
    ASSERT_EQ(all.size(), 2u);
    EXPECT_FALSE(all[0].is_current);
    EXPECT_TRUE(all[1].is_current);
    EXPECT_EQ(all[0].secret_key, (Bytes{1, 2}));
    EXPECT_THROW(db.put_anchor({"a1", "PEM", "x", t0, {}, "", false}), duplicate_key);
    EXPECT_EQ(db.current_anchor()->anchor_id, "a2");
}

TEST(Store, TransactionRollsBackOnError) {
    Store db(":memory:");
    EXPECT_THROW(db.transaction([&] {
        db.put_entity(entity("ee-1"));
        throw std::runtime_error("abort");
    }),
                 std::runtime_error);
    EXPECT_FALSE(db.get_entity("ee-1"));
}

TEST(Store, ContentsSurviveRestart) {
    const auto path = temp_db("durability");
    {
        Store db(path.string());
        db.put_entity(entity("ica-1", EntityRole::intermediate));
        db.put_certificate({"ica-1", 1, "ica-1", "PEM-A", t0, false});
        db.put_anchor({"a1", "PEM1", "Dilithium2", t0, {9, 9}, "", false});
        EXPECT_EQ(db.next_serial("ica-1"), 1u);
    }
    {
        Store db(path.string());
        ASSERT_TRUE(db.get_entity("ica-1"));
        EXPECT_EQ(db.get_entity("ica-1")->role, EntityRole::intermediate);
        EXPECT_EQ(db.get_certificate("ica-1", 1)->pem, "PEM-A");
        EXPECT_EQ(db.current_anchor()->secret_key, (Bytes{9, 9}));
        EXPECT_EQ(db.next_serial("ica-1"), 2u);
        EXPECT_EQ(db.export_pem_bundle(), "PEM-A");
    }
    std::filesystem::remove(path);
}

TEST(Credentials, SaltedDigestsVerify) {
    const auto a = digest_credentials("s3cret");
    const auto b = digest_credentials("s3cret");
    EXPECT_NE(a, b);
    EXPECT_TRUE(check_credentials(a, "s3cret"));
    EXPECT_TRUE(check_credentials(b, "s3cret"));
    EXPECT_FALSE(check_credentials(a, "s3cret!"));
    EXPECT_FALSE(check_credentials("garbage", "s3cret"));
    const auto strong = digest_credentials("s3cret", {"sha512", 100});
    EXPECT_TRUE(strong.starts_with("pbkdf2-sha512$100$"));
    EXPECT_TRUE(check_credentials(strong, "s3cret"));
    EXPECT_THROW(digest_credentials("x", {"md5", 1}), std::invalid_argument);
}
