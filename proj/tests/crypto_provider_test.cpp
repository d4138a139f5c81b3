#include "pqca/crypto/provider.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

using namespace pqca;
using namespace pqca::crypto;

TEST(AlgorithmRegistry, ListsTableEntriesAndBaselineInOrder) {
    const auto &all = list_algorithms();
    ASSERT_EQ(all.size(), 8u);
    const std::vector<std::string> expected{"falcon512",
                                            "falcon1024",
                                            "Dilithium2",
                                            "Dilithium3",
                                            "Dilithium5",
                                            "SPHINCS+-SHA2-128f-simple",
                                            "SPHINCS+-SHA2-192f-simple",
                                            "rsa2048-sha256"};
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i].name, expected[i]);
        EXPECT_TRUE(std::set<int>({1, 2, 3, 5}).count(all[i].claimed_nist_level)) << all[i].name;
    }
    const auto again = list_algorithms();
    ASSERT_EQ(again.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(again[i].name, all[i].name);
    }
}

TEST(AlgorithmRegistry, TableValues) {
    struct Row {
        const char *name;
        int level;
        std::size_t pk, sk, sig;
    };
    // Published parameter-set sizes.
    const Row rows[] = {
        {"falcon512", 1, 897, 1281, 752},
        {"falcon1024", 5, 1793, 2305, 1462},
        {"Dilithium2", 2, 1312, 2528, 2420},
        {"Dilithium3", 3, 1952, 4000, 3293},
        {"Dilithium5", 5, 2592, 4864, 4595},
        {"SPHINCS+-SHA2-128f-simple", 1, 32, 64, 17088},
        {"SPHINCS+-SHA2-192f-simple", 3, 48, 96, 35664},
    };
    for (const auto &row : rows) {
        const auto &spec = algorithm_info(row.name);
        EXPECT_EQ(spec.claimed_nist_level, row.level) << row.name;
        EXPECT_EQ(spec.public_key_bytes, row.pk) << row.name;
        EXPECT_EQ(spec.secret_key_bytes, row.sk) << row.name;
        EXPECT_EQ(spec.signature_bytes, row.sig) << row.name;
        EXPECT_TRUE(spec.is_post_quantum());
    }
    EXPECT_FALSE(algorithm_info("rsa2048-sha256").is_post_quantum());
}

TEST(AlgorithmRegistry, UnknownAndCaseSensitiveNames) {
    EXPECT_THROW(algorithm_info("md5"), unknown_algorithm);
    EXPECT_THROW(algorithm_info("dilithium2"), unknown_algorithm);
    EXPECT_THROW(algorithm_info("Falcon512"), unknown_algorithm);
    EXPECT_FALSE(is_registered("RSA2048-SHA256"));
    EXPECT_THROW(generate_keypair("md5"), unknown_algorithm);
    EXPECT_THROW(sign("md5", Bytes(10), Bytes(1)), unknown_algorithm);
    EXPECT_THROW(verify("md5", Bytes(10), Bytes(1), Signature{"md5", {}}), unknown_algorithm);
}

TEST(KeyGeneration, SizesMatchRegistry) {
    for (const auto &spec : list_algorithms()) {
        const auto kp = generate_keypair(spec.name);
        EXPECT_EQ(kp.algorithm, spec.name);
        EXPECT_EQ(kp.public_key.size(), spec.public_key_bytes) << spec.name;
        if (spec.is_post_quantum()) {
            EXPECT_EQ(kp.secret_key.size(), spec.secret_key_bytes) << spec.name;
        } else {
            EXPECT_LE(kp.secret_key.size(), spec.secret_key_bytes);
        }
    }
}

TEST(KeyGeneration, FreshKeysDiffer) {
    EXPECT_NE(generate_keypair("Dilithium2").public_key, generate_keypair("Dilithium2").public_key);
    EXPECT_EQ(generate_keypair("SPHINCS+-SHA2-128f-simple").public_key.size(), 32u);
    EXPECT_NE(generate_keypair("rsa2048-sha256").public_key, generate_keypair("rsa2048-sha256").public_key);
}

class PerAlgorithm : public ::testing::TestWithParam<std::string> {};

TEST_P(PerAlgorithm, RoundtripOverRandomMessages) {
    const auto &spec = algorithm_info(GetParam());
    const auto &kp = test_support::cached_keypair(spec.name);
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 100; ++i) {
        const Bytes m = test_support::random_message(rng);
        const auto sig = sign(spec.name, kp.secret_key, m);
        if (spec.fixed_signature_length()) {
            ASSERT_EQ(sig.bytes.size(), spec.signature_bytes);
        } else {
            ASSERT_LE(sig.bytes.size(), spec.signature_bytes);
        }
        ASSERT_TRUE(verify(spec.name, kp.public_key, m, sig)) << "message " << i;
    }
}

TEST_P(PerAlgorithm, SingleByteTamperIsRejected) {
    const auto &spec = algorithm_info(GetParam());
    const auto &kp = test_support::cached_keypair(spec.name);
    std::mt19937_64 rng(42);
    Bytes m = test_support::random_message(rng, 256);
    m.push_back(0x01);
    const auto sig = sign(spec.name, kp.secret_key, m);

    std::uniform_int_distribution<int> flip(1, 255);
    for (std::size_t i = 0; i < m.size(); i += 1 + m.size() / 40) {
        Bytes tampered = m;
        tampered[i] ^= static_cast<std::uint8_t>(flip(rng));
        EXPECT_FALSE(verify(spec.name, kp.public_key, tampered, sig)) << "message byte " << i;
    }
    const std::size_t step = 1 + sig.bytes.size() / 64;
    for (std::size_t i = 0; i < sig.bytes.size(); i += step) {
        Signature tampered = sig;
        tampered.bytes[i] ^= static_cast<std::uint8_t>(flip(rng));
        EXPECT_FALSE(verify(spec.name, kp.public_key, m, tampered)) << "signature byte " << i;
    }
    Signature last = sig;
    last.bytes.back() ^= 0x80;
    EXPECT_FALSE(verify(spec.name, kp.public_key, m, last));
}

TEST_P(PerAlgorithm, MalformedInputIsFalseNotCrash) {
    const auto &spec = algorithm_info(GetParam());
    const auto &kp = test_support::cached_keypair(spec.name);
    const Bytes m = to_bytes("malformed input");
    auto sig = sign(spec.name, kp.secret_key, m);

    Signature truncated = sig;
    truncated.bytes.pop_back();
    EXPECT_NO_THROW(EXPECT_FALSE(verify(spec.name, kp.public_key, m, truncated)));
    EXPECT_FALSE(verify(spec.name, kp.public_key, m, Signature{spec.name, {}}));
    Signature extended = sig;
    extended.bytes.push_back(0);
    EXPECT_FALSE(verify(spec.name, kp.public_key, m, extended));
    EXPECT_FALSE(verify(spec.name, Bytes(3, 0xff), m, sig));
    EXPECT_FALSE(verify(spec.name, {}, m, sig));
    EXPECT_THROW(sign(spec.name, Bytes(7, 1), m), malformed_key);
}

INSTANTIATE_TEST_SUITE_P(Registry, PerAlgorithm, ::testing::ValuesIn(test_support::algorithm_names()),
                         [](const auto &info) {
                             std::string name = info.param;
                             for (auto &c : name) {
                                 if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                             }
                             return name;
                         });

TEST(CrossAlgorithm, SignatureNeverVerifiesUnderAnotherAlgorithm) {
    const Bytes m = to_bytes("cross algorithm message");
    const auto names = test_support::algorithm_names();
    std::map<std::string, Signature> sigs;
    for (const auto &a : names) {
        sigs[a] = sign(a, test_support::cached_keypair(a).secret_key, m);
    }
    for (const auto &a : names) {
        for (const auto &b : names) {
            if (a == b) continue;
            const auto &pk_b = test_support::cached_keypair(b).public_key;
            const auto &pk_a = test_support::cached_keypair(a).public_key;
            EXPECT_FALSE(verify(b, pk_b, m, sigs[a])) << a << " -> " << b;
            Signature relabelled{b, sigs[a].bytes};
            EXPECT_FALSE(verify(b, pk_b, m, relabelled)) << a << " relabelled -> " << b;
            EXPECT_FALSE(verify(b, pk_a, m, relabelled)) << a << " key+sig relabelled -> " << b;
        }
    }
}

TEST(Concurrency, ParallelSignAndVerify) {
    const std::vector<std::string> algs{"falcon512", "Dilithium3", "rsa2048-sha256"};
    std::vector<std::thread> threads;
    std::atomic<int> failures{0};
    for (int t = 0; t < 6; ++t) {
        threads.emplace_back([&, t] {
            const auto &alg = algs[static_cast<std::size_t>(t) % algs.size()];
            const auto &kp = test_support::cached_keypair(alg);
            for (int i = 0; i < 20; ++i) {
                Bytes m = to_bytes("thread " + std::to_string(t) + " msg " + std::to_string(i));
                if (!verify(alg, kp.public_key, m, sign(alg, kp.secret_key, m))) {
                    ++failures;
                }
            }
        });
    }
    for (auto &th : threads) th.join();
    EXPECT_EQ(failures.load(), 0);
}

TEST(OperationCounters, SeparateClassicalFromPostQuantum) {
    const auto &rsa = test_support::cached_keypair("rsa2048-sha256");
    const auto &dil = test_support::cached_keypair("Dilithium2");
    const auto before = thread_operation_counters();
    const Bytes m = to_bytes("count me");
    auto sig = sign("rsa2048-sha256", rsa.secret_key, m);
    verify("rsa2048-sha256", rsa.public_key, m, sig);
    auto mid = thread_operation_counters();
    EXPECT_EQ(mid.classical - before.classical, 2u);
    EXPECT_EQ(mid.post_quantum, before.post_quantum);
    sign("Dilithium2", dil.secret_key, m);
    EXPECT_EQ(thread_operation_counters().post_quantum - mid.post_quantum, 1u);
}
