// Copyright 2026 The gmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmagic/magic.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "gmagic/errors.hpp"

namespace gmagic {

namespace {

constexpr int kMaxMinorDim = 2 * kSreSiteCap;

// In-place partial-pivot determinant of an n x n row-major buffer.
double det_inplace(double *a, int n) {
    if (n == 0) return 1.0;
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        double best = std::abs(a[c * n + c]);
        for (int r = c + 1; r < n; ++r) {
            const double v = std::abs(a[r * n + c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != c) {
            for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
            det = -det;
        }
        const double d = a[c * n + c];
        det *= d;
        const double inv = 1.0 / d;
        for (int r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] * inv;
            if (f == 0.0) continue;
            for (int k = c + 1; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
        }
    }
    return det;
}

double int_power(double x, int alpha) {
    double r = 1.0;
    double base = x;
    for (int e = alpha; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

// sum over even-size subsets x of (scale * det Gamma|_x)^alpha, Kahan
// compensated; terms span many orders of magnitude.
double even_minor_power_sum(const Eigen::MatrixXd &g, double alpha, double scale) {
    const int d = static_cast<int>(g.rows());
    const bool is_int_alpha = alpha == std::floor(alpha) && alpha > 0.0 && alpha < 64.0;
    const int ialpha = static_cast<int>(alpha);

    double sum = 0.0;
    double comp = 0.0;
    int idx[kMaxMinorDim];
    double buf[kMaxMinorDim * kMaxMinorDim];
    const std::uint64_t top = std::uint64_t{1} << d;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        const int k = std::popcount(mask);
        if (k % 2 != 0) continue;
        int c = 0;
        for (int i = 0; i < d; ++i) {
            if (mask & (std::uint64_t{1} << i)) idx[c++] = i;
        }
        for (int i = 0; i < k; ++i) {
            const double *row = g.data() + idx[i];  // column-major: walk a row
            for (int j = 0; j < k; ++j) buf[i * k + j] = row[static_cast<std::ptrdiff_t>(idx[j]) * d];
        }
        double det = det_inplace(buf, k) * scale;
        double term;
        if (is_int_alpha) {
            term = int_power(det, ialpha);
        } else {
            // Even minors of a covariance matrix are squared Pfaffians;
            // clamp roundoff negatives so fractional powers stay defined.
            if (det < 0.0) {
                if (det < -kClampTol) {
                    throw ContractError("even principal minor is negative beyond tolerance: " +
                                        std::to_string(det));
                }
                det = 0.0;
            }
            term = std::pow(det, alpha);
        }
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

SreValue sre_exact(const CovarianceMatrix &gamma, double alpha, int site_cap) {
    if (alpha <= 0.0 || alpha == 1.0) {
        throw InputError("sre_exact: alpha must be positive and != 1");
    }
    const int sites = gamma.sites();
    if (sites > site_cap) {
        throw ResourceError("sre_exact: L = " + std::to_string(sites) +
                            " exceeds the exact-enumeration cap " + std::to_string(site_cap));
    }
    gamma.require_pure();

    const int d = gamma.dim();
    const double norm = (Eigen::MatrixXd::Identity(d, d) + gamma.mat()).determinant();
    const double pure_norm = std::pow(2.0, sites);
    if (std::abs(norm / pure_norm - 1.0) > 1e-6) {
        throw ContractError("sre_exact: det(I + Gamma) = " + std::to_string(norm) +
                            " is inconsistent with a pure state");
    }

    const double s = even_minor_power_sum(gamma.mat(), alpha, 1.0 / pure_norm);
    const double value = std::log(s) / (1.0 - alpha) - sites * std::log(2.0);
    return SreValue{alpha, value};
}

SreValue nonlocal_bound(const EntanglementSpectrum &spec, double alpha) {
    if (alpha <= 0.0 || alpha == 1.0) {
        throw InputError("nonlocal_bound: alpha must be positive and != 1");
    }
    double sum = 0.0;
    for (double nu : spec.nus()) {
        const double x = nu * nu;
        const double term = 1.0 + std::pow(x, alpha) + std::pow(1.0 - x, alpha);
        sum += std::log(0.5 * term);
    }
    double value = sum / (1.0 - alpha);
    if (value < 0.0 && value > -kClampTol) value = 0.0;
    value += 0.0;  // normalize -0
    return SreValue{alpha, value};
}

double f_alpha_canonical(const EntanglementSpectrum &spec, const Bipartition &p, int alpha) {
    if (alpha < 2) {
        throw InputError("f_alpha_canonical: integer alpha >= 2 required");
    }
    if (spec.size() != p.min_side()) {
        throw InputError("f_alpha_canonical: spectrum size does not match the bipartition");
    }
    double f = std::pow(2.0, p.max_side());
    for (double nu : spec.nus()) {
        const double x = nu * nu;
        f *= 1.0 + int_power(x, alpha) + int_power(1.0 - x, alpha);
    }
    return f;
}

double f_alpha_enumerate(const CovarianceMatrix &gamma, int alpha) {
    if (alpha < 1) {
        throw InputError("f_alpha_enumerate: integer alpha >= 1 required");
    }
    if (gamma.sites() > kSreSiteCap) {
        throw ResourceError("f_alpha_enumerate: system too large for subset enumeration");
    }
    return even_minor_power_sum(gamma.mat(), static_cast<double>(alpha), 1.0);
}

CovarianceMatrix canonical_covariance(const EntanglementSpectrum &spec, const Bipartition &p) {
    bool swapped = false;
    const Bipartition q = p.normalized(&swapped);
    if (swapped) {
        throw InputError("canonical_covariance: m <= n required");
    }
    const int m = q.m();
    const int n = q.n();
    if (spec.size() != m) {
        throw InputError("canonical_covariance: spectrum size must equal m");
    }
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * (m + n), 2 * (m + n));
    auto put_j = [&g](int row, double v) {
        g(row, row + 1) = v;
        g(row + 1, row) = -v;
    };
    for (int k = 0; k < m; ++k) {
        const double nu = spec.nu(k);
        const double mu = spec.mu(k);
        const int a = 2 * k;
        const int b = 2 * m + 2 * k;
        put_j(a, nu);
        put_j(b, nu);
        g(a, b) = mu;
        g(b, a) = -mu;
        g(a + 1, b + 1) = -mu;
        g(b + 1, a + 1) = mu;
    }
    for (int l = m; l < n; ++l) {
        put_j(2 * m + 2 * l, 1.0);
    }
    return CovarianceMatrix(SkewMatrix(g));
}

namespace {

// Modes with mu below this are treated as locally pure; constructing their
// B-side partner from Gamma_AB would amplify roundoff by 1/mu.
constexpr double kMuCutoff = 1e-7;

}  // namespace

CanonicalDecomposition canonical_form(const CovarianceMatrix &gamma, const Bipartition &p) {
    if (p.sites() != gamma.sites()) {
        throw InputError("canonical_form: bipartition does not match state size");
    }
    if (p.m() > p.n()) {
        throw InputError("canonical_form: m <= n required; normalize the bipartition first");
    }
    gamma.require_pure();

    const int m = p.m();
    const int n = p.n();
    const Eigen::MatrixXd &g = gamma.mat();
    const Eigen::MatrixXd g_aa = g.topLeftCorner(2 * m, 2 * m);
    const Eigen::MatrixXd g_ab = g.topRightCorner(2 * m, 2 * n);
    const Eigen::MatrixXd g_bb = g.bottomRightCorner(2 * n, 2 * n);

    const CanonicalPairs canon_a = antisymmetric_canonical(SkewMatrix(g_aa));
    const Eigen::MatrixXd &u_a = canon_a.rotation.mat();
    EntanglementSpectrum spectrum(canon_a.pairs);

    // Entangled modes get their B partner from the image of the A pair under
    // Gamma_AB; locally pure A modes and trivial modes come from the kernel.
    std::vector<int> entangled;
    for (int k = 0; k < m; ++k) {
        if (spectrum.mu(k) > kMuCutoff) entangled.push_back(k);
    }
    const int e = static_cast<int>(entangled.size());

    Eigen::MatrixXd u_b(2 * n, 2 * n);
    Eigen::MatrixXd built(2 * n, 2 * e);
    for (int i = 0; i < e; ++i) {
        const int k = entangled[i];
        const double mu = spectrum.mu(k);
        built.col(2 * i) = g_ab.transpose() * u_a.col(2 * k) / mu;
        built.col(2 * i + 1) = -g_ab.transpose() * u_a.col(2 * k + 1) / mu;
    }

    Eigen::MatrixXd complement;
    if (e < n) {
        if (e == 0) {
            complement = Eigen::MatrixXd::Identity(2 * n, 2 * n);
        } else {
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(built);
            Eigen::MatrixXd full = qr.householderQ();
            complement = full.rightCols(2 * (n - e));
        }
        const Eigen::MatrixXd g_w = complement.transpose() * g_bb * complement;
        const CanonicalPairs canon_w = antisymmetric_canonical(SkewMatrix::antisymmetric_part(g_w));
        complement = complement * canon_w.rotation.mat();
    }

    int next_entangled = 0;
    int next_pure = 0;
    auto pure_pair = [&](int col) {
        u_b.col(col) = complement.col(2 * next_pure);
        u_b.col(col + 1) = complement.col(2 * next_pure + 1);
        ++next_pure;
    };
    for (int k = 0; k < m; ++k) {
        if (next_entangled < e && entangled[next_entangled] == k) {
            u_b.col(2 * k) = built.col(2 * next_entangled);
            u_b.col(2 * k + 1) = built.col(2 * next_entangled + 1);
            ++next_entangled;
        } else {
            pure_pair(2 * k);
        }
    }
    for (int l = m; l < n; ++l) {
        pure_pair(2 * l);
    }

    // Re-orthonormalize; R is near identity so Q stays close to the input.
    {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(u_b);
        Eigen::MatrixXd q = qr.householderQ();
        const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < 2 * n; ++j) {
            if (r(j, j) < 0.0) q.col(j) = -q.col(j);
        }
        u_b = q;
    }

    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(2 * (m + n), 2 * (m + n));
    u.topLeftCorner(2 * m, 2 * m) = u_a;
    u.bottomRightCorner(2 * n, 2 * n) = u_b;
    CovarianceMatrix gamma_can(SkewMatrix::antisymmetric_part(u.transpose() * g * u));

    const CovarianceMatrix reference = canonical_covariance(spectrum, p);
    const double residual = (gamma_can.mat() - reference.mat()).cwiseAbs().maxCoeff();
    if (residual > 1e-6) {
        throw ContractError("canonical_form: template residual " + std::to_string(residual) +
                            " (state too close to a degenerate spectrum?)");
    }

    return CanonicalDecomposition{Orthogonal(u_a.transpose()), Orthogonal(u_b.transpose()),
                                  std::move(spectrum), std::move(gamma_can), residual};
}

InterblockHessian interblock_hessian(double nu_a, double nu_b, int alpha, double step) {
    if (nu_a < 0.0 || nu_a > 1.0 || nu_b < 0.0 || nu_b > 1.0) {
        throw InputError("interblock_hessian: nu values must lie in [0, 1]");
    }
    const bool a_edge = nu_a == 0.0 || nu_a == 1.0;
    const bool b_edge = nu_b == 0.0 || nu_b == 1.0;
    if (a_edge && b_edge) {
        throw InputError("interblock_hessian: at most one of nu_a, nu_b may sit at {0, 1}");
    }
    if (step < 1e-4 || step > 1e-2) {
        throw InputError("interblock_hessian: step must lie in [1e-4, 1e-2]");
    }
    if (alpha < 2) {
        throw InputError("interblock_hessian: integer alpha >= 2 required");
    }

    const Bipartition p(2, 2);
    const CovarianceMatrix gamma0 =
        canonical_covariance(EntanglementSpectrum({nu_a, nu_b}), p);

    // Four generators mix the two A-side 2x2 subspaces, four the B side.
    std::vector<Eigen::MatrixXd> gens;
    for (int side = 0; side < 2; ++side) {
        const int base = side == 0 ? 0 : 4;
        for (int pi = 0; pi < 2; ++pi) {
            for (int qi = 2; qi < 4; ++qi) {
                Eigen::MatrixXd k = Eigen::MatrixXd::Zero(8, 8);
                k(base + pi, base + qi) = 1.0;
                k(base + qi, base + pi) = -1.0;
                gens.push_back(k);
            }
        }
    }

    auto f_at = [&](const Eigen::Matrix<double, 8, 1> &theta) {
        Eigen::MatrixXd k = Eigen::MatrixXd::Zero(8, 8);
        for (int i = 0; i < 8; ++i) k += theta(i) * gens[static_cast<std::size_t>(i)];
        const SpecialOrthogonal o = expm_antisymmetric(SkewMatrix::antisymmetric_part(k), 1.0);
        const CovarianceMatrix rotated = apply_orthogonal(gamma0, o);
        return f_alpha_enumerate(rotated, alpha);
    };

    auto hessian_eigs = [&](double h, std::array<double, 8> *grad) {
        using Vec8 = Eigen::Matrix<double, 8, 1>;
        const double f0 = f_at(Vec8::Zero());
        Eigen::Matrix<double, 8, 8> hess;
        std::array<double, 16> fp{};
        for (int i = 0; i < 8; ++i) {
            Vec8 t = Vec8::Zero();
            t(i) = h;
            fp[static_cast<std::size_t>(2 * i)] = f_at(t);
            t(i) = -h;
            fp[static_cast<std::size_t>(2 * i + 1)] = f_at(t);
            hess(i, i) = (fp[static_cast<std::size_t>(2 * i)] - 2.0 * f0 +
                          fp[static_cast<std::size_t>(2 * i + 1)]) /
                         (h * h);
            if (grad != nullptr) {
                (*grad)[static_cast<std::size_t>(i)] =
                    (fp[static_cast<std::size_t>(2 * i)] - fp[static_cast<std::size_t>(2 * i + 1)]) /
                    (2.0 * h);
            }
        }
        for (int i = 0; i < 8; ++i) {
            for (int j = i + 1; j < 8; ++j) {
                Vec8 t = Vec8::Zero();
                t(i) = h;
                t(j) = h;
                const double fpp = f_at(t);
                t(j) = -h;
                const double fpm = f_at(t);
                t(i) = -h;
                const double fmm = f_at(t);
                t(j) = h;
                const double fmp = f_at(t);
                hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> es(hess);
        std::array<double, 8> eigs{};
        for (int i = 0; i < 8; ++i) eigs[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        return eigs;
    };

    InterblockHessian result{};
    result.eigenvalues = hessian_eigs(step, &result.gradient);
    result.eigenvalues_half = hessian_eigs(0.5 * step, nullptr);
    result.sign_consistent = true;
    for (int i = 0; i < 8; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if ((result.eigenvalues[idx] < 0.0) != (result.eigenvalues_half[idx] < 0.0)) {
            result.sign_consistent = false;
        }
    }
    return result;
}

SchattenGap lp_schatten_gap(const Eigen::MatrixXd &a, int alpha) {
    if (alpha < 2) {
        throw InputError("lp_schatten_gap: integer alpha >= 2 required");
    }
    double lhs = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            lhs += int_power(std::abs(a(i, j)), 2 * alpha);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    double rhs = 0.0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        rhs += int_power(svd.singularValues()(k), 2 * alpha);
    }
    return SchattenGap{lhs, rhs};
}

}  // namespace gmagic
