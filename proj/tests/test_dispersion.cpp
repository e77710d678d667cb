#include <doctest.h>

#include <cstdio>
#include <string>

#include "fixtures.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/qc_matrix.hpp"

using namespace qcpg;

TEST_CASE("dispersal of the p=3 base reproduces the 9x9 incidence matrix") {
    const QcBinaryMatrix H = disperse(build_prime_base(3));
    CHECK(H.expand() == fixtures::pag332_incidence());
}

TEST_CASE("dispersal of the high-rate 6x127 base has the pinned weights") {
    const QcBinaryMatrix H = disperse(fixtures::high_rate_base());
    CHECK(H.rows() == 762);
    CHECK(H.cols() == 16129);
    const BinaryMatrix M = H.expand();
    CHECK(M.row_weight(0) == 127);
    CHECK(M.row_weight(761) == 127);
    CHECK(M.col_weight(0) == 6);
    CHECK(M.col_weight(16128) == 6);
    CHECK(M.ones() == 762LL * 127);
}

TEST_CASE("dispersal of the masked 4x8 base has the pinned dimensions") {
    const BinaryMatrix M = fixtures::rate_half_1016();
    CHECK(M.rows() == 508);
    CHECK(M.cols() == 1016);
    for (long j = 0; j < M.cols(); j += 127) CHECK(M.col_weight(j) == 3);
    for (long i = 0; i < M.rows(); i += 127) CHECK(M.row_weight(i) == 6);
}

TEST_CASE("masked entries disperse to zero blocks, residue 0 to identity") {
    BaseMatrix B(2, 2, 5, BaseOrigin::Masked);
    B.set_residue(0, 0, 0);
    B.set_residue(0, 1, 3);
    B.set_masked(1, 0);
    B.set_residue(1, 1, 0);
    const QcBinaryMatrix H = disperse(B);
    CHECK(!H.is_zero_block(0, 0));
    CHECK(H.shift(0, 0) == 0);
    CHECK(H.is_zero_block(1, 0));
    const BinaryMatrix M = H.expand();
    for (long u = 0; u < 5; ++u) {
        CHECK(M.get(u, u));           // identity block
        CHECK(!M.get(5 + u, u));      // zero block row
        CHECK(M.get(u, 5 + (u + 3) % 5));
    }
}

TEST_CASE("expand_block") {
    SUBCASE("shift 0 is the identity") {
        const BinaryMatrix I = expand_block(0, 3);
        for (long u = 0; u < 3; ++u)
            for (long v = 0; v < 3; ++v) CHECK(I.get(u, v) == (u == v));
    }
    SUBCASE("shift 1, order 3") {
        const BinaryMatrix P = expand_block(1, 3);
        CHECK(P.get(0, 1));
        CHECK(P.get(1, 2));
        CHECK(P.get(2, 0));
        CHECK(P.ones() == 3);
    }
    SUBCASE("shift 2 equals shift 1 squared") {
        const BinaryMatrix P = expand_block(1, 3);
        const BinaryMatrix P2 = expand_block(2, 3);
        // composition of permutations: row u of P2 has its 1 where P moves P's image
        for (long u = 0; u < 3; ++u) {
            long mid = -1, end = -1;
            for (long v = 0; v < 3; ++v)
                if (P.get(u, v)) mid = v;
            for (long v = 0; v < 3; ++v)
                if (P.get(mid, v)) end = v;
            CHECK(P2.get(u, end));
        }
    }
    SUBCASE("permutation property for every shift") {
        for (long t : {2L, 3L, 5L, 7L})
            for (long s = 0; s < t; ++s) {
                const BinaryMatrix M = expand_block(static_cast<std::int32_t>(s), t);
                for (long u = 0; u < t; ++u) CHECK(M.row_weight(u) == 1);
                for (long v = 0; v < t; ++v) CHECK(M.col_weight(v) == 1);
            }
    }
    SUBCASE("out of range shift") {
        CHECK_THROWS_WITH_AS(expand_block(3, 3), doctest::Contains("ShiftOutOfRange"), Error);
    }
}

TEST_CASE("generator rows") {
    SUBCASE("p=3 generators are rows 0, 3, 6") {
        const QcBinaryMatrix H = disperse(build_prime_base(3));
        const BinaryMatrix full = H.expand();
        const GeneratorRows G = generator_rows(H);
        REQUIRE(G.rows.rows() == 3);
        for (long a = 0; a < 3; ++a)
            for (long j = 0; j < 9; ++j) CHECK(G.rows.get(a, j) == full.get(a * 3, j));
    }
    SUBCASE("identity block array puts ones at section starts") {
        BaseMatrix B(2, 3, 4, BaseOrigin::Submatrix);  // all residues 0
        const GeneratorRows G = generator_rows(disperse(B));
        for (long a = 0; a < 2; ++a)
            for (long j = 0; j < 12; ++j) CHECK(G.rows.get(a, j) == (j % 4 == 0));
    }
    SUBCASE("high-rate array: 6 generator rows of weight 127") {
        const GeneratorRows G = generator_rows(disperse(fixtures::high_rate_base()));
        REQUIRE(G.rows.rows() == 6);
        for (long a = 0; a < 6; ++a) CHECK(G.rows.row_weight(a) == 127);
    }
}

TEST_CASE("expand_generators") {
    SUBCASE("round trip over fixtures") {
        for (const BaseMatrix& B :
             {build_prime_base(3), build_prime_base(5), build_cyclic_base(16, 5),
              mask(fixtures::gf127_4x8_base(), fixtures::gf127_4x8_mask())}) {
            const QcBinaryMatrix H = disperse(B);
            CHECK(expand_generators(generator_rows(H)) == H);
        }
    }
    SUBCASE("all-zero generators give an all-zero array") {
        GeneratorRows G;
        G.block_order = 3;
        G.rows = BinaryMatrix(2, 6);
        const QcBinaryMatrix H = expand_generators(G);
        CHECK(H.zero_block_count() == 4);
    }
    SUBCASE("single generator row with recorded shifts") {
        GeneratorRows G;
        G.block_order = 4;
        G.rows = BinaryMatrix(1, 8);
        G.rows.set(0, 1, true);  // shift 1
        G.rows.set(0, 7, true);  // shift 3
        const QcBinaryMatrix H = expand_generators(G);
        CHECK(H.shift(0, 0) == 1);
        CHECK(H.shift(0, 1) == 3);
    }
    SUBCASE("a section with two ones is rejected") {
        GeneratorRows G;
        G.block_order = 3;
        G.rows = BinaryMatrix(1, 6);
        G.rows.set(0, 0, true);
        G.rows.set(0, 2, true);
        CHECK_THROWS_WITH_AS(expand_generators(G), doctest::Contains("SectionWeightExceeded"),
                             Error);
    }
}

TEST_CASE("qc_structure_check") {
    SUBCASE("recovers the p=3 base grid") {
        const QcBinaryMatrix H = qc_structure_check(fixtures::pag332_incidence(), 3);
        const long expected[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
        for (long a = 0; a < 3; ++a)
            for (long b = 0; b < 3; ++b) CHECK(H.shift(a, b) == expected[a][b]);
    }
    SUBCASE("block identity splits into diagonal CPMs and zero blocks") {
        BinaryMatrix I(6, 6);
        for (long u = 0; u < 6; ++u) I.set(u, u, true);
        const QcBinaryMatrix H = qc_structure_check(I, 3);
        CHECK(H.shift(0, 0) == 0);
        CHECK(H.shift(1, 1) == 0);
        CHECK(H.is_zero_block(0, 1));
        CHECK(H.is_zero_block(1, 0));
    }
    SUBCASE("one flipped bit breaks the block structure") {
        BinaryMatrix M = fixtures::pag332_incidence();
        M.set(4, 0, true);
        CHECK_THROWS_WITH_AS(qc_structure_check(M, 3), doctest::Contains("NotBlockStructured"),
                             Error);
    }
    SUBCASE("round trip against dispersion for all fixtures") {
        for (const BaseMatrix& B :
             {build_prime_base(3), build_prime_base(7), build_cyclic_base(16, 5),
              mask(fixtures::gf127_4x8_base(), fixtures::gf127_4x8_mask())}) {
            const QcBinaryMatrix H = disperse(B);
            const QcBinaryMatrix back = qc_structure_check(H.expand(), B.modulus());
            CHECK(back == H);
        }
    }
}

TEST_CASE("ones count equals (blocks - masked) * order") {
    const BaseMatrix M = mask(fixtures::gf127_4x8_base(), fixtures::gf127_4x8_mask());
    const QcBinaryMatrix H = disperse(M);
    CHECK(H.expand().ones() == (4 * 8 - 8) * 127LL);
}

TEST_CASE("section-wise shift closure: shifting the last row of a block-row gives the top row") {
    const QcBinaryMatrix H = disperse(build_prime_base(5));
    const BinaryMatrix M = H.expand();
    const long t = 5;
    for (long a = 0; a < 5; ++a) {
        const long last = a * t + (t - 1);
        for (long b = 0; b < 5; ++b)
            for (long u = 0; u < t; ++u)
                CHECK(M.get(last, b * t + u) == M.get(a * t, b * t + (u + 1) % t));
    }
}

TEST_CASE("alist round trip") {
    for (const BaseMatrix& B : {build_prime_base(3), build_cyclic_base(16, 5)}) {
        const BinaryMatrix M = disperse(B).expand();
        const std::string path = "alist_roundtrip.tmp";
        write_alist(M, path);
        CHECK(read_alist(path) == M);
        std::remove(path.c_str());
    }
}
