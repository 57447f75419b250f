#include <cstring>

#include "doctest.h"
#include "hcu/boundary.hpp"
#include "hcu/field.hpp"
#include "test_support.hpp"

using namespace hcu;

namespace {

Field1D<3> random_field1(support::Rng& rng, int n, double g) {
    Field1D<3> f(n);
    for (int j = 0; j < n; ++j) f.at(j) = rng.cons1(g);
    return f;
}

Field2D<4> random_field2(support::Rng& rng, int nx, int ny, double g) {
    Field2D<4> f(nx, ny);
    for (int k = 0; k < ny; ++k)
        for (int j = 0; j < nx; ++j) f.at(j, k) = rng.cons2(g);
    return f;
}

template <class FieldT>
bool same_bits(const FieldT& a, const FieldT& b) {
    return a.data.size() == b.data.size() &&
           std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(a.data[0])) == 0;
}

}  // namespace

TEST_SUITE("boundary") {

TEST_CASE("free fill copies the nearest interior cell") {
    support::Rng rng;
    const double g = 1.4;
    Field1D<3> f = random_field1(rng, 8, g);
    fill_ghost(f, BoundarySpec1::all_free(), g);
    for (int i = 0; i < 3; ++i) {
        CHECK(f.at(-1)[i] == f.at(0)[i]);
        CHECK(f.at(-2)[i] == f.at(0)[i]);
        CHECK(f.at(8)[i] == f.at(7)[i]);
        CHECK(f.at(9)[i] == f.at(7)[i]);
    }
}

TEST_CASE("periodic fill wraps") {
    support::Rng rng;
    const double g = 1.4;
    Field1D<3> f = random_field1(rng, 6, g);
    fill_ghost(f, BoundarySpec1::all_periodic(), g);
    for (int i = 0; i < 3; ++i) {
        CHECK(f.at(-1)[i] == f.at(5)[i]);
        CHECK(f.at(-2)[i] == f.at(4)[i]);
        CHECK(f.at(6)[i] == f.at(0)[i]);
        CHECK(f.at(7)[i] == f.at(1)[i]);
    }
}

TEST_CASE("wall fill mirrors momentum") {
    support::Rng rng;
    const double g = 1.4;
    Field1D<3> f = random_field1(rng, 8, g);
    fill_ghost(f, BoundarySpec1::all_wall(), g);
    CHECK(f.at(-1)[0] == f.at(0)[0]);
    CHECK(f.at(-1)[1] == -f.at(0)[1]);
    CHECK(f.at(-1)[2] == f.at(0)[2]);
    CHECK(f.at(-2)[0] == f.at(1)[0]);
    CHECK(f.at(-2)[1] == -f.at(1)[1]);
    CHECK(f.at(8)[1] == -f.at(7)[1]);
    CHECK(f.at(9)[1] == -f.at(6)[1]);
}

TEST_CASE("dirichlet fill pins the configured state") {
    support::Rng rng;
    const double g = 1.4;
    Field1D<3> f = random_field1(rng, 8, g);
    BoundarySpec1 bc;
    bc.left = {BcType::Dirichlet, Prim1{2, 0.5, 3}};
    bc.right = {BcType::Free, {}};
    fill_ghost(f, bc, g);
    const Cons1 u = prim_to_cons(Prim1{2, 0.5, 3}, g);
    for (int i = 0; i < 3; ++i) {
        CHECK(f.at(-1)[i] == u[i]);
        CHECK(f.at(-2)[i] == u[i]);
    }
}

TEST_CASE("mismatched periodic pair is rejected") {
    BoundarySpec1 bc;
    bc.left.type = BcType::Periodic;
    bc.right.type = BcType::Free;
    CHECK_THROWS_AS(bc.validate(), ConfigError);

    BoundarySpec2 bc2;
    bc2.bottom.type = BcType::Periodic;
    CHECK_THROWS_AS(bc2.validate(), ConfigError);
}

TEST_CASE("fill is idempotent") {
    support::Rng rng;
    const double g = 1.4;
    Field1D<3> f = random_field1(rng, 8, g);
    fill_ghost(f, BoundarySpec1::all_wall(), g);
    Field1D<3> once = f;
    fill_ghost(f, BoundarySpec1::all_wall(), g);
    CHECK(same_bits(once, f));

    Field2D<4> f2 = random_field2(rng, 6, 5, g);
    fill_ghost(f2, BoundarySpec2::all_periodic(), g);
    Field2D<4> once2 = f2;
    fill_ghost(f2, BoundarySpec2::all_periodic(), g);
    CHECK(same_bits(once2, f2));
}

TEST_CASE("2-D sides and corners") {
    support::Rng rng;
    const double g = 1.4;
    const int nx = 7, ny = 5;

    SUBCASE("periodic wraps both directions and corners") {
        Field2D<4> f = random_field2(rng, nx, ny, g);
        fill_ghost(f, BoundarySpec2::all_periodic(), g);
        for (int k = 0; k < ny; ++k)
            for (int i = 0; i < 4; ++i) {
                CHECK(f.at(-1, k)[i] == f.at(nx - 1, k)[i]);
                CHECK(f.at(nx, k)[i] == f.at(0, k)[i]);
            }
        for (int j = 0; j < nx; ++j)
            for (int i = 0; i < 4; ++i) {
                CHECK(f.at(j, -2)[i] == f.at(j, ny - 2)[i]);
                CHECK(f.at(j, ny + 1)[i] == f.at(j, 1)[i]);
            }
        // corner: y wrap of the x-filled ghost column
        for (int i = 0; i < 4; ++i)
            CHECK(f.at(-1, -1)[i] == f.at(nx - 1, ny - 1)[i]);
    }

    SUBCASE("walls mirror the normal momentum only") {
        Field2D<4> f = random_field2(rng, nx, ny, g);
        fill_ghost(f, BoundarySpec2::all_wall(), g);
        for (int k = 0; k < ny; ++k) {
            CHECK(f.at(-1, k)[0] == f.at(0, k)[0]);
            CHECK(f.at(-1, k)[1] == -f.at(0, k)[1]);
            CHECK(f.at(-1, k)[2] == f.at(0, k)[2]);
            CHECK(f.at(-1, k)[3] == f.at(0, k)[3]);
            CHECK(f.at(nx + 1, k)[1] == -f.at(nx - 2, k)[1]);
        }
        for (int j = 0; j < nx; ++j) {
            CHECK(f.at(j, -1)[1] == f.at(j, 0)[1]);
            CHECK(f.at(j, -1)[2] == -f.at(j, 0)[2]);
            CHECK(f.at(j, ny)[2] == -f.at(j, ny - 1)[2]);
        }
        // corner reflects both components through the two passes
        CHECK(f.at(-1, -1)[1] == -f.at(0, 0)[1]);
        CHECK(f.at(-1, -1)[2] == -f.at(0, 0)[2]);
    }

    SUBCASE("mixed free and dirichlet") {
        Field2D<4> f = random_field2(rng, nx, ny, g);
        BoundarySpec2 bc;
        bc.left.type = BcType::Free;
        bc.right.type = BcType::Free;
        bc.bottom = {BcType::Dirichlet, Prim2{2, 0, 0, 1}};
        bc.top = {BcType::Dirichlet, Prim2{1, 0, 0, 2.5}};
        fill_ghost(f, bc, g);
        const Cons2 lo = prim_to_cons(Prim2{2, 0, 0, 1}, g);
        const Cons2 hi = prim_to_cons(Prim2{1, 0, 0, 2.5}, g);
        for (int j = 0; j < nx; ++j)
            for (int i = 0; i < 4; ++i) {
                CHECK(f.at(j, -1)[i] == lo[i]);
                CHECK(f.at(j, -2)[i] == lo[i]);
                CHECK(f.at(j, ny)[i] == hi[i]);
                CHECK(f.at(j, ny + 1)[i] == hi[i]);
            }
        for (int k = 0; k < ny; ++k)
            for (int i = 0; i < 4; ++i) CHECK(f.at(-2, k)[i] == f.at(0, k)[i]);
    }
}

}  // TEST_SUITE
