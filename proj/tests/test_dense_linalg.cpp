#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "gausskern/dense_linalg.hpp"
#include "gausskern/errors.hpp"
#include "gausskern/gaussian_approx.hpp"

using namespace gausskern;

namespace
{
Matrix random_matrix(int rows, int cols, unsigned seed)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
    {
        for (int j = 0; j < cols; ++j)
        {
            m(i, j) = dist(gen);
        }
    }
    return m;
}

std::vector<std::complex<double>> sorted(std::vector<std::complex<double>> v)
{
    std::sort(v.begin(), v.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}
} // namespace

TEST_CASE("spd_solve_pivoted")
{
    Vector b(3);
    b << 1.0, -2.0, 0.5;
    CHECK((spd_solve_pivoted(Matrix::Identity(3, 3), b) - b).norm() == 0.0);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0)  = 4.0;
    d(1, 1)  = 9.0;
    Vector rhs(2);
    rhs << 8.0, 27.0;
    const Vector x = spd_solve_pivoted(d, rhs);
    CHECK(x[0] == doctest::Approx(2.0));
    CHECK(x[1] == doctest::Approx(3.0));

    SUBCASE("Gram system at sigma = 0.8, rho = 1, N = 6")
    {
        const GaussianTarget target(0.8, 1.0);
        const auto mu   = frequencies(target, hermite_rule(6));
        const Matrix h  = gram_matrix(target, mu);
        const Vector g  = gram_rhs(target, mu);
        const Vector gm = spd_solve_pivoted(h, g);
        CHECK((h * gm - g).norm() <= 1e-10 * g.norm());
    }

    SUBCASE("random SPD with cond <= 1e12")
    {
        const Matrix q = thin_svd(random_matrix(8, 8, 7)).u;
        Vector s(8);
        for (int i = 0; i < 8; ++i)
        {
            s[i] = std::pow(10.0, -12.0 * i / 7.0);
        }
        Matrix a   = q * s.asDiagonal() * q.transpose();
        a          = 0.5 * (a + a.transpose()).eval();
        const Vector xx = random_matrix(8, 1, 3).col(0);
        const Vector bb = a * xx;
        CHECK((a * spd_solve_pivoted(a, bb, 1e-16) - bb).norm() <= 1e-8 * bb.norm());
    }

    Matrix indefinite(2, 2);
    indefinite << 1.0, 2.0, 2.0, 1.0;
    CHECK_THROWS_AS(spd_solve_pivoted(indefinite, rhs), NotPositiveDefinite);
    Matrix asym(2, 2);
    asym << 2.0, 1.0, 0.0, 2.0;
    CHECK_THROWS_AS(spd_solve_pivoted(asym, rhs), DomainError);
    CHECK_THROWS_AS(spd_solve_pivoted(Matrix::Identity(3, 3), rhs), DomainError);
}

TEST_CASE("thin_svd")
{
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 3.0;
    d(2, 2) = 2.0;
    const auto sd = thin_svd(d);
    CHECK(sd.s[0] == doctest::Approx(3.0));
    CHECK(sd.s[1] == doctest::Approx(2.0));
    CHECK(sd.s[2] == doctest::Approx(1.0));

    Vector u(3), v(4);
    u << 1.0, 2.0, 2.0;
    v << 0.0, 3.0, 4.0, 0.0;
    const auto sr = thin_svd(u * v.transpose());
    CHECK(sr.s[0] == doctest::Approx(15.0));
    CHECK(std::abs(sr.s[1]) <= 1e-14);

    const Matrix a = random_matrix(5, 6, 11);
    const auto s   = thin_svd(a);
    CHECK(s.u.cols() == 5);
    CHECK(s.v.rows() == 6);
    CHECK(s.v.cols() == 5);
    CHECK((a - s.u * s.s.asDiagonal() * s.v.transpose()).norm() <= 1e-12 * a.norm());
    CHECK((s.u.transpose() * s.u - Matrix::Identity(5, 5)).norm() <= 1e-12);
    CHECK((s.v.transpose() * s.v - Matrix::Identity(5, 5)).norm() <= 1e-12);
    for (int i = 0; i + 1 < 5; ++i)
    {
        CHECK(s.s[i] >= s.s[i + 1]);
    }
}

TEST_CASE("pencil_eigenvalues")
{
    Matrix dg = Matrix::Zero(3, 3);
    dg.diagonal() << 0.5, -2.0, 7.0;
    auto ev = sorted(pencil_eigenvalues(Matrix::Identity(3, 3), dg));
    CHECK(ev[0].real() == doctest::Approx(-2.0));
    CHECK(ev[1].real() == doctest::Approx(0.5));
    CHECK(ev[2].real() == doctest::Approx(7.0));

    for (auto z : pencil_eigenvalues(2.0 * Matrix::Identity(4, 4), Matrix::Identity(4, 4)))
    {
        CHECK(std::abs(z - 0.5) <= 1e-14);
    }

    SUBCASE("(I, A) against characteristic-polynomial roots")
    {
        Matrix a(2, 2);
        a << 1.0, 2.0, -3.0, 0.5;
        const double tr = a.trace();
        const double det = a.determinant();
        const std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr - 4.0 * det));
        auto want = sorted({(tr + disc) / 2.0, (tr - disc) / 2.0});
        auto got  = sorted(pencil_eigenvalues(Matrix::Identity(2, 2), a));
        for (int i = 0; i < 2; ++i)
        {
            CHECK(std::abs(got[i] - want[i]) <= 1e-12);
        }

        // Companion-type matrix for (x-1)(x-2)(x-3) = x³ - 6x² + 11x - 6, similarity-scrambled.
        Matrix c = Matrix::Zero(3, 3);
        c(0, 2) = 6.0;
        c(1, 0) = 1.0;
        c(1, 2) = -11.0;
        c(2, 1) = 1.0;
        c(2, 2) = 6.0;
        const Matrix p = random_matrix(3, 3, 5) + 3.0 * Matrix::Identity(3, 3);
        const Matrix m = p * c * p.inverse();
        auto roots     = sorted(pencil_eigenvalues(Matrix::Identity(3, 3), m));
        for (int i = 0; i < 3; ++i)
        {
            CHECK(std::abs(roots[i] - double(i + 1)) <= 1e-10);
        }
    }

    CHECK_THROWS_AS(pencil_eigenvalues(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DomainError);
}

TEST_CASE("pseudo_inverse drops small singular values")
{
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1e-15;
    const Matrix p = pseudo_inverse(a);
    CHECK(p(0, 0) == doctest::Approx(1.0));
    CHECK(p(1, 1) == 0.0);
}

TEST_CASE("least_squares")
{
    const Matrix a  = random_matrix(4, 4, 21) + 4.0 * Matrix::Identity(4, 4);
    const Vector xs = random_matrix(4, 1, 22).col(0);
    CHECK((least_squares(a, Vector(a * xs)) - xs).norm() <= 1e-13 * xs.norm());

    const Matrix tall = random_matrix(9, 3, 23);
    const Vector x3   = random_matrix(3, 1, 24).col(0);
    const Vector b3   = tall * x3;
    const Vector got  = least_squares(tall, b3);
    CHECK((got - x3).norm() <= 1e-13);
    CHECK((tall * got - b3).norm() <= 1e-13);

    SUBCASE("Vandermonde in the derivative data at N = 4")
    {
        // Gauss nodes of the moment functional reproduce f^{(k)}(0), k <= 7.
        const double sigma = 1.0;
        const auto rule    = hermite_rule(4);
        ComplexMatrix v(8, 4);
        ComplexVector d(8);
        double fk = 1.0;
        for (int k = 0; k < 8; ++k)
        {
            d[k] = k % 2 ? 0.0 : fk;
            if (k % 2 == 0)
            {
                fk *= -(k + 1.0) / sigma;
            }
            for (int j = 0; j < 4; ++j)
            {
                v(k, j) = std::pow(std::complex<double>(0.0, std::sqrt(2.0 / sigma) * rule.zeros[j]), k);
            }
        }
        const ComplexVector gm = least_squares(v, d);
        CHECK((v * gm - d).norm() <= 1e-8 * d.norm());
    }

    CHECK_THROWS_AS(least_squares(random_matrix(2, 3, 1), Vector::Ones(2)), DomainError);
}
