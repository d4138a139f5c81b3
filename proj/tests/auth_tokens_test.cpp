#include "pqca/auth/token_store.hpp"
#include "pqca/store/store.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

using namespace pqca;
using namespace pqca::auth;
using namespace std::chrono_literals;

namespace {
const Timestamp t0 = from_unix(1'700'000'000);

token_error::Kind failure_kind(TokenStore &store, const std::string &id, Scope scope, Timestamp now) {
    try {
        store.validate(id, scope, now);
    } catch (const token_error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "validation unexpectedly succeeded";
    return token_error::Kind::unknown;
}
}  // namespace

TEST(Tokens, ExpiryIsIssuePlusTtl) {
    MemoryTokenRepository repo;
    TokenStore store(repo, 300s);
    const auto token = store.issue("ica-1", Scope::certify, t0);
    EXPECT_EQ(token.expires_at, t0 + 300s);
    EXPECT_EQ(token.issued_at, t0);
    EXPECT_EQ(token.entity_id, "ica-1");
    EXPECT_EQ(token.scope, Scope::certify);
}

TEST(Tokens, IdsAreDistinctAndLongEnough) {
    MemoryTokenRepository repo;
    TokenStore store(repo);
    std::set<std::string> ids;
    for (int i = 0; i < 200; ++i) {
        const auto token = store.issue("ica-1", Scope::certify, t0);
        // 128 bits in base64 needs ceil(128 / 6) = 22 characters.
        EXPECT_GE(token.token_id.size(), 22u);
        EXPECT_TRUE(ids.insert(token.token_id).second);
    }
}

TEST(Tokens, ExpiryBoundaryIsStrict) {
    MemoryTokenRepository repo;
    TokenStore store(repo, 300s);
    const auto token = store.issue("ica-1", Scope::certify, t0);
    EXPECT_EQ(store.validate(token.token_id, Scope::certify, token.expires_at - 1s), "ica-1");
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::certify, token.expires_at), token_error::Kind::expired);
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::certify, token.expires_at + 1s), token_error::Kind::expired);
}

TEST(Tokens, ExpiryLatchesAgainstStaleClocks) {
    MemoryTokenRepository repo;
    TokenStore store(repo, 300s);
    const auto token = store.issue("ica-1", Scope::certify, t0);
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::certify, t0 + 301s), token_error::Kind::expired);
    // A reader with an older clock must not see the token come back to life.
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::certify, t0 + 10s), token_error::Kind::expired);
}

TEST(Tokens, ScopesAreIsolatedAndErrorsDistinguishable) {
    MemoryTokenRepository repo;
    TokenStore store(repo);
    const auto certify = store.issue("ee-1", Scope::certify, t0);
    const auto verify = store.issue("ee-1", Scope::verify, t0);
    EXPECT_EQ(failure_kind(store, certify.token_id, Scope::verify, t0), token_error::Kind::wrong_scope);
    EXPECT_EQ(failure_kind(store, verify.token_id, Scope::certify, t0), token_error::Kind::wrong_scope);
    EXPECT_EQ(failure_kind(store, "no-such-token", Scope::certify, t0), token_error::Kind::unknown);
    EXPECT_EQ(store.validate(verify.token_id, Scope::verify, t0 + 1s), "ee-1");
}

TEST(Tokens, ValidationNeverExtendsLifetime) {
    MemoryTokenRepository repo;
    TokenStore store(repo, 10s);
    const auto token = store.issue("ee-1", Scope::certify, t0);
    for (int i = 0; i < 10; ++i) {
        store.validate(token.token_id, Scope::certify, t0 + std::chrono::seconds{i});
    }
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::certify, t0 + 10s), token_error::Kind::expired);
}

TEST(Tokens, DurableRepositoryBehavesTheSame) {
    store::Store db(":memory:");
    TokenStore store(db, 300s);
    const auto token = store.issue("ica-1", Scope::verify, t0);
    EXPECT_EQ(store.validate(token.token_id, Scope::verify, t0 + 299s), "ica-1");
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::certify, t0), token_error::Kind::wrong_scope);
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::verify, t0 + 300s), token_error::Kind::expired);
    EXPECT_EQ(failure_kind(store, token.token_id, Scope::verify, t0), token_error::Kind::expired);
}

TEST(Tokens, ConcurrentIssueAndValidate) {
    MemoryTokenRepository repo;
    TokenStore store(repo);
    std::vector<std::thread> threads;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (int i = 0; i < 100; ++i) {
                const auto id = "e" + std::to_string(t);
                const auto token = store.issue(id, Scope::certify, t0);
                if (store.validate(token.token_id, Scope::certify, t0 + 1s) != id) {
                    ++failures;
                }
            }
        });
    }
    for (auto &th : threads) th.join();
    EXPECT_EQ(failures.load(), 0);
}

TEST(Tokens, NonPositiveTtlIsRejected) {
    MemoryTokenRepository repo;
    EXPECT_THROW(TokenStore(repo, 0s), std::invalid_argument);
}
