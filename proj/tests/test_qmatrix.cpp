#include <cmath>
#include <random>

#include "doctest.h"
#include "quatdom/qmatrix.hpp"

using namespace quatdom;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240131);
    return gen;
}

Quaternion random_quat(double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    auto& g = rng();
    return {dist(g), dist(g), dist(g), dist(g)};
}

QMatrix random_matrix(std::size_t m, std::size_t n, double scale = 1.0) {
    std::vector<Quaternion> e(m * n);
    for (auto& q : e) q = random_quat(scale);
    return QMatrix(m, n, std::move(e));
}

QMatrix random_hermitian(std::size_t n, double scale = 1.0) {
    std::vector<Quaternion> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uniform_real_distribution<double> dist(-scale, scale);
        e[i * n + i] = Quaternion(dist(rng()));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Quaternion q = random_quat(scale);
            e[i * n + j] = q;
            e[j * n + i] = conj(q);
        }
    }
    return QMatrix(n, n, std::move(e), StructureTag::hermitian);
}

QMatrix random_pd(std::size_t n) {
    const QMatrix g = random_matrix(n, n);
    QMatrix h = g.multiply(g.adjoint()).add(QMatrix::identity(n).scale(0.05));
    return h.with_tag(StructureTag::hermitian);
}

QMatrix row_vector(const std::vector<Quaternion>& entries) {
    return QMatrix(1, entries.size(), entries);
}

}  // namespace

TEST_CASE("construction rejects empty shapes and bad structure tags") {
    CHECK_THROWS_AS(QMatrix(0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(QMatrix(3, 0, {}), std::invalid_argument);

    // hermitian tag demands conj-symmetry and real diagonal
    std::vector<Quaternion> bad{Quaternion{1, 1, 0, 0}};
    CHECK_THROWS_AS(QMatrix(1, 1, bad, StructureTag::hermitian), std::invalid_argument);

    // anti-hermitian scalar has zero real part
    std::vector<Quaternion> anti{Quaternion{0, 2, -1, 3}};
    CHECK_NOTHROW(QMatrix(1, 1, anti, StructureTag::anti_hermitian));
    std::vector<Quaternion> not_anti{Quaternion{0.5, 2, -1, 3}};
    CHECK_THROWS_AS(QMatrix(1, 1, not_anti, StructureTag::anti_hermitian),
                    std::invalid_argument);
}

TEST_CASE("identity, adjoint involution, dimension mismatch") {
    const QMatrix a = random_matrix(3, 2);
    const QMatrix i3 = QMatrix::identity(3);
    CHECK(i3.multiply(a).max_abs_diff(a) == 0.0);
    CHECK(a.adjoint().adjoint().max_abs_diff(a) == 0.0);
    CHECK_THROWS_AS(a.multiply(a), std::invalid_argument);
}

TEST_CASE("matrix embedding is multiplicative and adjoint-compatible") {
    for (int t = 0; t < 25; ++t) {
        const QMatrix a = random_matrix(2, 2);
        const QMatrix b = random_matrix(2, 2);
        const ComplexMatrix lhs = embed_matrix(a.multiply(b));
        const ComplexMatrix rhs = embed_matrix(a).multiply(embed_matrix(b));
        CHECK(lhs.max_abs_diff(rhs) < 1e-12);
    }
    for (int t = 0; t < 25; ++t) {
        const QMatrix a = random_matrix(3, 2);
        CHECK(embed_matrix(a.adjoint()).max_abs_diff(embed_matrix(a).conjugate_transpose()) <
              1e-12);
    }
    // 1x1 identity embeds to the 2x2 identity
    CHECK(embed_matrix(QMatrix::identity(1)).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("embedding of a Hermitian matrix is complex Hermitian") {
    const QMatrix h = random_hermitian(3);
    const ComplexMatrix e = embed_matrix(h);
    CHECK(e.max_abs_diff(e.conjugate_transpose()) < 1e-12);
}

TEST_CASE("qdet: identity, 1x1 sign, and the embedding determinant relation") {
    CHECK(qdet_hermitian(QMatrix::identity(4)) == doctest::Approx(1.0));

    // 1x1 Hermitian determinant equals the real entry, sign included
    for (double v : {0.84, -1.25, 0.0, 2.0, -0.75}) {
        const QMatrix h(1, 1, {Quaternion(v)}, StructureTag::hermitian);
        CHECK(qdet_hermitian(h) == doctest::Approx(v).epsilon(1e-12));
    }

    // qdet(G adj(G))^2 == |det embed(G)|^2
    for (int t = 0; t < 40; ++t) {
        const QMatrix g = random_matrix(3, 3);
        const QMatrix h = g.multiply(g.adjoint()).with_tag(StructureTag::hermitian);
        const double lhs = qdet_hermitian(h);
        const double rhs = std::norm(embed_matrix(g).determinant());
        CHECK(lhs * lhs == doctest::Approx(rhs).epsilon(1e-9));
    }

    CHECK_THROWS_AS(qdet_hermitian(random_matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("qdet sign tracks the inertia on indefinite matrices") {
    for (int t = 0; t < 40; ++t) {
        const QMatrix h = random_hermitian(3, 2.0);
        const std::vector<double> eig = embed_matrix(h).hermitian_eigenvalues();
        double prod = 1.0;
        for (std::size_t i = 0; i < eig.size(); i += 2) prod *= eig[i];  // paired values
        CHECK(qdet_hermitian(h) == doctest::Approx(prod).epsilon(1e-8));
    }
}

TEST_CASE("cholesky: identity, scalar rejection, round trip") {
    const auto gi = cholesky(QMatrix::identity(3));
    REQUIRE(gi.has_value());
    CHECK(gi->max_abs_diff(QMatrix::identity(3)) < 1e-14);

    // 1 - |q|^2 with |q| = 1.5 is negative
    const QMatrix neg(1, 1, {Quaternion(1.0 - 2.25)}, StructureTag::hermitian);
    CHECK(!is_positive_definite(neg));
    CHECK(!cholesky(neg).has_value());

    for (int t = 0; t < 30; ++t) {
        const QMatrix h = random_pd(3);
        const auto g = cholesky(h);
        REQUIRE(g.has_value());
        const QMatrix back = g->multiply(g->adjoint());
        CHECK(back.max_abs_diff(h) < 1e-10 * std::max(1.0, h.frobenius_norm()));
        CHECK(qdet_hermitian(h) > 0.0);
    }
}

TEST_CASE("positive definiteness agrees with the complex eigenvalue oracle") {
    int checked = 0;
    while (checked < 1000) {
        const std::size_t n = 1 + checked % 4;
        const QMatrix h = random_hermitian(n, 1.5);
        const std::vector<double> eig = embed_matrix(h).hermitian_eigenvalues();
        const bool oracle = eig.front() > 0.0;
        CHECK(is_positive_definite(h) == oracle);
        ++checked;
    }
}

TEST_CASE("cholesky_det equals qdet on positive definite input") {
    for (int t = 0; t < 30; ++t) {
        const QMatrix h = random_pd(3);
        const auto d = cholesky_det(h);
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(qdet_hermitian(h)).epsilon(1e-9));
    }
    CHECK(!cholesky_det(QMatrix(1, 1, {Quaternion(-1.0)}, StructureTag::hermitian))
               .has_value());
}

TEST_CASE("schur split: identity, block diagonal, product law") {
    const auto [d1, c1] = schur_det_split(QMatrix::identity(2), 1);
    CHECK(d1 == doctest::Approx(1.0));
    CHECK(c1 == doctest::Approx(1.0));

    // zero off-diagonal block: complement is just the corner entry
    std::vector<Quaternion> bd{Quaternion(2.0), Quaternion{}, Quaternion{}, Quaternion(5.0)};
    const auto [d2, c2] = schur_det_split(QMatrix(2, 2, bd, StructureTag::hermitian), 1);
    CHECK(d2 == doctest::Approx(2.0));
    CHECK(c2 == doctest::Approx(5.0));

    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 3;
        const QMatrix h = random_pd(n);
        const auto [da, comp] = schur_det_split(h, n - 1);
        CHECK(da * comp == doctest::Approx(qdet_hermitian(h)).epsilon(1e-10));
    }
}

TEST_CASE("rank-one resolvent identities for quaternionic vectors") {
    // (I + adj(u) u)^-1 adj(u) = adj(u) / (1 + u adj(u)), entrywise
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = 1 + t % 4;
        std::vector<Quaternion> ue(m);
        for (auto& q : ue) q = random_quat();
        const QMatrix u = row_vector(ue);
        const QMatrix uh = u.adjoint();
        const QMatrix a = QMatrix::identity(m).add(uh.multiply(u));
        const QMatrix x = solve_left(a, uh);
        double uu = 0.0;
        for (const auto& q : ue) uu += norm_sq(q);
        const QMatrix expect = uh.scale(1.0 / (1.0 + uu));
        CHECK(x.max_abs_diff(expect) < 1e-10);
    }

    // w (I + adj(u) u)^-1 adj(w) = w adj(w) - |w adj(u)|^2 / (1 + u adj(u))
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = 1 + t % 4;
        std::vector<Quaternion> ue(m), we(m);
        for (auto& q : ue) q = random_quat();
        for (auto& q : we) q = random_quat();
        const QMatrix u = row_vector(ue), w = row_vector(we);
        const QMatrix a = QMatrix::identity(m).add(u.adjoint().multiply(u));
        const QMatrix y = solve_left(a, w.adjoint());
        const Quaternion lhs_q = w.multiply(y).at(0, 0);
        double uu = 0.0, ww = 0.0;
        for (const auto& q : ue) uu += norm_sq(q);
        for (const auto& q : we) ww += norm_sq(q);
        const Quaternion wu = w.multiply(u.adjoint()).at(0, 0);
        const double expect = ww - norm_sq(wu) / (1.0 + uu);
        CHECK(std::abs(lhs_q.w - expect) < 1e-10);
        CHECK(std::sqrt(norm_sq(lhs_q - Quaternion(lhs_q.w))) < 1e-10);  // real scalar
    }
}

TEST_CASE("mirror identities with plain transpose, inside the unit ball") {
    // (I - u' conj(u))^-1 u' = u' / (1 - conj(u) u'), for conj(u) u' < 1
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = 1 + t % 4;
        std::vector<Quaternion> ue(m);
        for (auto& q : ue) q = random_quat(0.4 / double(m));
        const QMatrix u = row_vector(ue);
        const QMatrix ut = u.transpose();           // u', no conjugation
        const QMatrix ubar = u.conjugate();         // conj entries, still a row
        double uu = 0.0;
        for (const auto& q : ue) uu += norm_sq(q);  // conj(u) u' = sum |u_i|^2
        REQUIRE(uu < 1.0);

        const QMatrix a = QMatrix::identity(m).subtract(ut.multiply(ubar));
        const QMatrix x = solve_left(a, ut);
        CHECK(x.max_abs_diff(ut.scale(1.0 / (1.0 - uu))) < 1e-10);

        // w (I - u' conj(u))^-1 adj(w) = w adj(w) + |w u'|^2 / (1 - conj(u) u')
        std::vector<Quaternion> we(m);
        for (auto& q : we) q = random_quat();
        const QMatrix w = row_vector(we);
        const QMatrix y = solve_left(a, w.adjoint());
        const Quaternion lhs_q = w.multiply(y).at(0, 0);
        double ww = 0.0;
        for (const auto& q : we) ww += norm_sq(q);
        const Quaternion wut = w.multiply(ut).at(0, 0);
        const double expect = ww + norm_sq(wut) / (1.0 - uu);
        CHECK(std::abs(lhs_q.w - expect) < 1e-10);
    }
}

TEST_CASE("solve rejects singular systems") {
    std::vector<Quaternion> z(4);
    CHECK_THROWS_AS(solve_left(QMatrix(2, 2, z), QMatrix::identity(2)), std::domain_error);
}
