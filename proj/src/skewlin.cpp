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

#include "gmagic/skewlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "gmagic/errors.hpp"

namespace gmagic {

namespace {

double max_abs(const Eigen::MatrixXd &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

SkewMatrix::SkewMatrix(const Eigen::MatrixXd &m) : mat_() {
    if (m.rows() != m.cols()) {
        throw InputError("SkewMatrix: matrix must be square");
    }
    if (m.rows() == 0 || m.rows() % 2 != 0) {
        throw InputError("SkewMatrix: dimension must be a positive even integer");
    }
    const double scale = 1.0 + max_abs(m);
    const double deviation = max_abs(m + m.transpose());
    if (deviation > kAntisymmetryTol * scale) {
        throw InputError("SkewMatrix: input is not antisymmetric (max |M + M^T| = " +
                         std::to_string(deviation) + ")");
    }
    mat_ = 0.5 * (m - m.transpose());
    mat_.diagonal().setZero();
}

SkewMatrix SkewMatrix::antisymmetric_part(const Eigen::MatrixXd &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        throw InputError("SkewMatrix: dimension must be a positive even integer");
    }
    Eigen::MatrixXd a = 0.5 * (m - m.transpose());
    a.diagonal().setZero();
    return SkewMatrix(std::move(a), Unchecked{});
}

SkewMatrix SkewMatrix::zero(int dim) {
    if (dim <= 0 || dim % 2 != 0) {
        throw InputError("SkewMatrix: dimension must be a positive even integer");
    }
    return SkewMatrix(Eigen::MatrixXd::Zero(dim, dim), Unchecked{});
}

Orthogonal::Orthogonal(const Eigen::MatrixXd &o) : mat_(o) {
    if (o.rows() != o.cols() || o.rows() == 0) {
        throw InputError("Orthogonal: matrix must be square and nonempty");
    }
    const Eigen::MatrixXd gram = o * o.transpose() - Eigen::MatrixXd::Identity(o.rows(), o.rows());
    if (max_abs(gram) > kOrthogonalityTol) {
        throw ContractError("Orthogonal: O O^T deviates from identity by " +
                            std::to_string(max_abs(gram)));
    }
    const double det = o.determinant();
    if (std::abs(std::abs(det) - 1.0) > kDetTol) {
        throw ContractError("Orthogonal: |det| deviates from 1 by " +
                            std::to_string(std::abs(det) - 1.0));
    }
    det_sign_ = det > 0.0 ? 1 : -1;
}

SpecialOrthogonal::SpecialOrthogonal(const Eigen::MatrixXd &o) : mat_(o) {
    Orthogonal checked(o);
    if (checked.det_sign() != 1) {
        throw ContractError("SpecialOrthogonal: determinant is -1");
    }
}

SpecialOrthogonal SpecialOrthogonal::identity(int dim) {
    return SpecialOrthogonal(Eigen::MatrixXd::Identity(dim, dim));
}

double principal_minor_det(const SkewMatrix &m, std::span<const int> support) {
    const int k = static_cast<int>(support.size());
    if (k == 0) {
        return 1.0;
    }
    for (int i = 0; i < k; ++i) {
        if (support[i] < 0 || support[i] >= m.dim()) {
            throw InputError("principal_minor_det: index out of range");
        }
        if (i + 1 < k && support[i] >= support[i + 1]) {
            throw InputError("principal_minor_det: support must be sorted and distinct");
        }
    }
    if (k % 2 != 0) {
        return 0.0;
    }
    Eigen::MatrixXd sub(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            sub(i, j) = m.mat()(support[i], support[j]);
        }
    }
    return sub.determinant();
}

CanonicalPairs antisymmetric_canonical(const SkewMatrix &m) {
    const int n = m.dim();
    const double scale = 1.0 + max_abs(m.mat());
    const double ztol = 1e-12 * scale;

    Eigen::RealSchur<Eigen::MatrixXd> schur(m.mat());
    Eigen::MatrixXd u = schur.matrixU();
    const Eigen::MatrixXd &t = schur.matrixT();

    // The Schur form of a skew matrix is block diagonal: 2x2 blocks carry the
    // conjugate pairs ±i eps, 1x1 blocks are zero modes.
    struct Block {
        double eps;
        int col_a;
        int col_b;
        bool flip;  // read the pair as (col_b, col_a) to make eps positive
        int order;
    };
    std::vector<Block> blocks;
    std::vector<int> singles;
    int i = 0;
    while (i < n) {
        if (i + 1 < n && std::abs(t(i + 1, i)) > ztol) {
            const double eps = 0.5 * (t(i, i + 1) - t(i + 1, i));
            blocks.push_back({std::abs(eps), i, i + 1, eps < 0.0, static_cast<int>(blocks.size())});
            i += 2;
        } else {
            singles.push_back(i);
            i += 1;
        }
    }
    for (std::size_t s = 0; s + 1 < singles.size(); s += 2) {
        blocks.push_back(
            {0.0, singles[s], singles[s + 1], false, static_cast<int>(blocks.size())});
    }

    std::stable_sort(blocks.begin(), blocks.end(), [](const Block &a, const Block &b) {
        if (a.eps != b.eps) return a.eps > b.eps;
        return a.order < b.order;
    });

    // Column flips inside a block negate the determinant; absorb an odd flip
    // count into a zero block when one exists.
    int flips = 0;
    for (const Block &b : blocks) {
        if (b.flip) ++flips;
    }
    Eigen::MatrixXd o(n, n);
    std::vector<double> pairs;
    pairs.reserve(blocks.size());
    int col = 0;
    for (const Block &b : blocks) {
        const int first = b.flip ? b.col_b : b.col_a;
        const int second = b.flip ? b.col_a : b.col_b;
        o.col(col) = u.col(first);
        o.col(col + 1) = u.col(second);
        pairs.push_back(b.eps);
        col += 2;
    }

    double det = u.determinant() * (flips % 2 == 0 ? 1.0 : -1.0);
    if (det < 0.0) {
        for (int k = static_cast<int>(blocks.size()) - 1; k >= 0; --k) {
            if (pairs[k] <= ztol) {
                o.col(2 * k + 1) = -o.col(2 * k + 1);
                det = -det;
                break;
            }
        }
    }

    return CanonicalPairs{Orthogonal(o), std::move(pairs)};
}

std::vector<double> antisymmetric_pair_values(const SkewMatrix &m) {
    const int n = m.dim();
    const double ztol = 1e-12 * (1.0 + max_abs(m.mat()));
    Eigen::RealSchur<Eigen::MatrixXd> schur(m.mat(), /*computeU=*/false);
    const Eigen::MatrixXd &t = schur.matrixT();
    std::vector<double> pairs;
    pairs.reserve(static_cast<std::size_t>(n) / 2);
    int zeros = 0;
    int i = 0;
    while (i < n) {
        if (i + 1 < n && std::abs(t(i + 1, i)) > ztol) {
            pairs.push_back(0.5 * std::abs(t(i, i + 1) - t(i + 1, i)));
            i += 2;
        } else {
            ++zeros;
            i += 1;
        }
    }
    for (int z = 0; z + 1 < zeros; z += 2) pairs.push_back(0.0);
    std::sort(pairs.begin(), pairs.end(), std::greater<>());
    return pairs;
}

SpecialOrthogonal expm_antisymmetric(const SkewMatrix &k, double s) {
    const int n = k.dim();
    const CanonicalPairs canon = antisymmetric_canonical(k);
    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t b = 0; b < canon.pairs.size(); ++b) {
        const double angle = s * canon.pairs[b];
        const double c = std::cos(angle);
        const double sn = std::sin(angle);
        const int i = static_cast<int>(2 * b);
        rot(i, i) = c;
        rot(i, i + 1) = sn;
        rot(i + 1, i) = -sn;
        rot(i + 1, i + 1) = c;
    }
    const Eigen::MatrixXd &o = canon.rotation.mat();
    return SpecialOrthogonal(o * rot * o.transpose());
}

SpecialOrthogonal haar_special_orthogonal(Rng &rng, int dim) {
    if (dim < 2) {
        throw InputError("haar_special_orthogonal: dim must be >= 2");
    }
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = rng.normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        if (r(j, j) < 0.0) {
            q.col(j) = -q.col(j);
        }
    }
    if (q.determinant() < 0.0) {
        q.col(0) = -q.col(0);
    }
    return SpecialOrthogonal(q);
}

}  // namespace gmagic
