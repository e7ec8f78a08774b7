#include "doctest.h"

#include "latreal/errors.hpp"
#include "latreal/oracle.hpp"

using namespace latreal;

namespace {

// [n]_q! as an element of the symmetrizer's field
CyclotomicField::Elem q_factorial(const CyclotomicField& f, long long qpow, int n) {
    // prod_{k=1}^n (1 + q + ... + q^{k-1})
    auto acc = f.one();
    for (int k = 2; k <= n; ++k) {
        auto sum = f.zero();
        for (int j = 0; j < k; ++j) sum = f.add(sum, f.root_power(qpow * j));
        acc = f.mul(acc, sum);
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("cyclotomic field arithmetic and inverses") {
    CyclotomicField f(12);
    auto z = f.root_power(1);
    // zeta^12 = 1
    auto p = f.one();
    for (int k = 0; k < 12; ++k) p = f.mul(p, z);
    CHECK(p == f.one());
    // inverse of (1 + zeta)
    auto a = f.add(f.one(), z);
    CHECK(f.mul(a, f.inverse(a)) == f.one());
    CHECK_THROWS_AS(f.inverse(f.zero()), DomainError);
}

TEST_CASE("rank-1 symmetrizer is the q-factorial") {
    // q = e^{i pi/3} = zeta_6, node exponent 1/3
    BraidingDiagram q = parse_diagram("rank=1; q[1]=1/3");
    QuantumSymmetrizer sym(q, 8);
    const auto& f = sym.field();
    // node power: q_11 = zeta_N^{e N/2}
    long long qpow = f.order() / 6;
    for (int n = 1; n <= 6; ++n) {
        auto block = sym.block({n});
        REQUIRE(block.size() == 1);
        CHECK(block[0][0] == q_factorial(f, qpow, n));
    }
}

TEST_CASE("rank-1 graded dimensions follow the q-factorial zero pattern") {
    // q primitive third root: dims 1,1,1,0,0,...
    BraidingDiagram q3 = parse_diagram("rank=1; q[1]=2/3");
    GradedDimensions d3 = graded_dimensions(q3, 6, 8);
    CHECK(d3.by_total_degree == std::vector<long long>{1, 1, 1, 0, 0, 0, 0});
    // q = 1: the polynomial ring
    BraidingDiagram q1 = parse_diagram("rank=1; q[1]=0");
    GradedDimensions d1 = graded_dimensions(q1, 5, 8);
    CHECK(d1.by_total_degree == std::vector<long long>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("degree-1 block is the identity and degree-2 unrolls the braiding") {
    BraidingDiagram q = parse_diagram("rank=2; q[1]=2/3; q[2]=1; q[1,2]=4/3");
    QuantumSymmetrizer sym(q);
    auto b1 = sym.block({1, 0});
    CHECK(b1.size() == 1);
    CHECK(b1[0][0] == sym.field().one());
    // mixed degree (1,1): basis {xy, yx}; Sha = I + rho(c) with
    // rho(c)(x_i otimes x_j) = q_ij x_j otimes x_i in the symmetric gauge
    auto b2 = sym.block({1, 1});
    REQUIRE(b2.size() == 2);
    const auto& f = sym.field();
    // q_12 = gauge root of the edge: (q_12 q_21)^{1/2} = e^{i pi 2/3}
    long long half_edge = 2 * f.order() / 6; // exponent 2/3 -> zeta_N^{N/3}
    CHECK(b2[0][0] == f.one());
    CHECK(b2[1][1] == f.one());
    CHECK(b2[0][1] == f.root_power(half_edge));
    CHECK(b2[1][0] == f.root_power(half_edge));
}

TEST_CASE("Matsumoto lift does not depend on the reduced-word strategy") {
    BraidingDiagram q = parse_diagram("rank=2; q[1]=2/3; q[2]=1; q[1,2]=4/3");
    QuantumSymmetrizer sym(q, 6);
    for (auto degree : std::vector<std::vector<long long>>{{2, 1}, {2, 2}, {3, 1}, {1, 3}}) {
        auto a = sym.block(degree, WordStrategy::BubbleSort);
        auto b = sym.block(degree, WordStrategy::Lexicographic);
        CHECK(a == b);
    }
}

TEST_CASE("sl(2|1)-type dimensions match PBW monomial counts") {
    // row-3 braiding at q = e^{i pi/3}: roots a1, a2, a12 with truncation
    // orders ord(q_gg) = (3, 2, 2)
    BraidingDiagram q = parse_diagram("rank=2; q[1]=2/3; q[2]=1; q[1,2]=4/3");
    std::vector<RootVector> roots = {{1, 0}, {0, 1}, {1, 1}};
    std::vector<long long> orders = truncation_orders(q, roots);
    CHECK(orders == std::vector<long long>{3, 2, 2});
    GradedDimensions dims = graded_dimensions(q, 5, 6);
    for (const auto& [degree, dim] : dims.by_multidegree)
        CHECK(dim == pbw_monomial_count(roots, orders, degree));
    // total dimension of the Nichols algebra is 3*2*2 = 12: check the sum
    long long total = 1;
    for (const auto& [degree, dim] : dims.by_multidegree) total += dim;
    CHECK(total == 12);
}

TEST_CASE("degree cap") {
    BraidingDiagram q = parse_diagram("rank=1; q[1]=2/3");
    QuantumSymmetrizer sym(q, 4);
    CHECK_THROWS_AS(sym.block({5}), DegreeCapExceeded);
    CHECK_THROWS_AS(graded_dimensions(q, 7, 4), DegreeCapExceeded);
}
