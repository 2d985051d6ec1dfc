#include "delone/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace delone {

namespace {

void gram_schmidt(const Matrix& b, Matrix& bstar, Matrix& mu, Vec& bn2) {
    const int n = static_cast<int>(b.size());
    bstar.assign(n, Vec());
    mu.assign(n, Vec(n, 0.0));
    bn2.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        bstar[i] = b[i];
        for (int j = 0; j < i; ++j) {
            mu[i][j] = bn2[j] > 0.0 ? dot(b[i], bstar[j]) / bn2[j] : 0.0;
            for (std::size_t d = 0; d < bstar[i].size(); ++d)
                bstar[i][d] -= mu[i][j] * bstar[j][d];
        }
        bn2[i] = norm2(bstar[i]);
    }
}

}  // namespace

Matrix identity_matrix(int n) {
    Matrix m(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

Matrix transpose(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Matrix t(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

double determinant(Matrix a) {
    const int n = static_cast<int>(a.size());
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (a[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Vec solve_linear(Matrix a, Vec rhs) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) < 1e-300) throw std::runtime_error("linalg: singular system");
        std::swap(a[piv], a[c]);
        std::swap(rhs[piv], rhs[c]);
        for (int r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            rhs[r] -= f * rhs[c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    Vec x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

Matrix invert(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Matrix inv(n);
    for (int c = 0; c < n; ++c) {
        Vec e(n, 0.0);
        e[c] = 1.0;
        const Vec col = solve_linear(a, std::move(e));
        inv[c] = col;  // temporarily rows of the transpose
    }
    return transpose(inv);
}

Vec lattice_point(const Matrix& basis, std::span<const std::int64_t> coeffs) {
    const int n = static_cast<int>(basis.size());
    Vec p(basis[0].size(), 0.0);
    for (int i = 0; i < n; ++i)
        for (std::size_t d = 0; d < p.size(); ++d)
            p[d] += static_cast<double>(coeffs[i]) * basis[i][d];
    return p;
}

Vec lattice_coords(const Matrix& basis, std::span<const double> x) {
    // x = B^T t  with basis vectors as rows of B
    Matrix bt = transpose(basis);
    return solve_linear(std::move(bt), Vec(x.begin(), x.end()));
}

Matrix lll_reduce(Matrix b) {
    const int n = static_cast<int>(b.size());
    if (n <= 1) return b;
    constexpr double delta = 0.75;
    Matrix bstar, mu;
    Vec bn2;
    gram_schmidt(b, bstar, mu, bn2);
    int k = 1;
    int guard = 0;
    while (k < n && ++guard < 10000) {
        for (int j = k - 1; j >= 0; --j) {
            const double q = std::round(mu[k][j]);
            if (q != 0.0) {
                for (std::size_t d = 0; d < b[k].size(); ++d) b[k][d] -= q * b[j][d];
                gram_schmidt(b, bstar, mu, bn2);
            }
        }
        if (bn2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bn2[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt(b, bstar, mu, bn2);
            k = std::max(k - 1, 1);
        }
    }
    return b;
}

std::vector<LatticeVector> enumerate_lattice(const Matrix& basis, std::span<const double> center,
                                             double radius) {
    const int n = static_cast<int>(basis.size());
    Matrix bstar, mu;
    Vec bn2;
    gram_schmidt(basis, bstar, mu, bn2);
    for (int i = 0; i < n; ++i)
        if (!(bn2[i] > 0.0)) throw std::invalid_argument("lattice: basis is singular");

    const Vec t = lattice_coords(basis, center);
    constexpr std::size_t kMaxCandidates = 10'000'000;

    std::vector<LatticeVector> out;
    std::vector<double> shifted(n, 0.0);  // k_i - t_i chosen so far
    std::vector<std::int64_t> k(n, 0);

    // recursive descent over coefficients, last axis first
    auto descend = [&](auto&& self, int level, double used2) -> void {
        if (level < 0) {
            LatticeVector lv;
            lv.coeffs.assign(k.begin(), k.end());
            lv.point = lattice_point(basis, lv.coeffs);
            lv.norm2 = dist2(lv.point, center);
            if (lv.norm2 <= radius * radius * (1.0 + 1e-12) + 1e-300) out.push_back(std::move(lv));
            return;
        }
        double s = 0.0;
        for (int i = level + 1; i < n; ++i) s += shifted[i] * mu[i][level];
        const double rem = radius * radius - used2;
        if (rem < 0.0) return;
        const double w = std::sqrt(rem / bn2[level]);
        const double mid = t[level] - s;
        const auto klo = static_cast<std::int64_t>(std::ceil(mid - w - 1e-9));
        const auto khi = static_cast<std::int64_t>(std::floor(mid + w + 1e-9));
        for (std::int64_t kk = klo; kk <= khi; ++kk) {
            k[level] = kk;
            shifted[level] = static_cast<double>(kk) - t[level];
            const double c = shifted[level] + s;
            const double add = c * c * bn2[level];
            if (used2 + add > radius * radius * (1.0 + 1e-12)) continue;
            if (out.size() > kMaxCandidates)
                throw std::runtime_error("lattice: enumeration too large");
            self(self, level - 1, used2 + add);
        }
    };
    descend(descend, n - 1, 0.0);
    return out;
}

}  // namespace delone
