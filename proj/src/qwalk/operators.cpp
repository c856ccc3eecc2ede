// Copyright 2026 The qwepi Authors
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

#include "qwepi/qwalk/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qwepi/error.hpp"

namespace qwepi::qwalk {

double unitarity_deviation(const Matrix &op) {
    if (op.rows() != op.cols()) {
        throw Error(ErrorKind::InvalidDimension, "unitarity check needs a square matrix");
    }
    const Matrix gram = op.adjoint() * op;
    const Matrix identity = Matrix::Identity(op.rows(), op.cols());
    return (gram - identity).cwiseAbs().maxCoeff();
}

CoinOperator::CoinOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw Error(ErrorKind::InvalidDimension, "coin matrix must be square and non-empty");
    }
    if (unitarity_deviation(matrix_) > tolerance::kAlgebraic) {
        throw Error(ErrorKind::UnsupportedCoin, "coin matrix is not unitary");
    }
}

Vector CoinOperator::apply(const Vector &coin_state) const {
    if (coin_state.size() != matrix_.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "coin state length does not match coin dimension");
    }
    return matrix_ * coin_state;
}

CoinOperator make_hadamard_coin(int qubits) {
    if (qubits != 1 && qubits != 2) {
        throw Error(ErrorKind::UnsupportedCoin,
                    "Hadamard coin supports 1 or 2 qubits, got " + std::to_string(qubits));
    }
    Matrix h(2, 2);
    const double s = 1.0 / std::numbers::sqrt2;
    h << s, s, s, -s;
    if (qubits == 1) {
        return CoinOperator(h);
    }
    Matrix hh(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            hh(r, c) = h(r / 2, c / 2) * h(r % 2, c % 2);
        }
    }
    return CoinOperator(hh);
}

CoinOperator make_dft_coin(int d) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidDimension, "DFT coin needs d >= 2");
    }
    Matrix m(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            // Reduce the exponent first so the phase stays exact for small d.
            const int e = (j * k) % d;
            if (e == 0) {
                m(j, k) = scale;
            } else {
                m(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e / d);
            }
        }
    }
    return CoinOperator(m);
}

CoinOperator embed_dft3_gate() {
    Matrix m = Matrix::Zero(4, 4);
    m.topLeftCorner(3, 3) = make_dft_coin(3).matrix();
    m(3, 3) = 1.0;
    return CoinOperator(m);
}

CoinOperator make_identity_coin(int d) {
    if (d < 1) {
        throw Error(ErrorKind::InvalidDimension, "identity coin needs d >= 1");
    }
    return CoinOperator(Matrix::Identity(d, d));
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) {
        throw Error(ErrorKind::InvalidDimension, "empty permutation");
    }
    std::vector<bool> hit(image_.size(), false);
    for (const std::size_t target : image_) {
        if (target >= image_.size() || hit[target]) {
            throw Error(ErrorKind::InvalidDimension, "shift action is not a bijection");
        }
        hit[target] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        image[i] = i;
    }
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv[image_[i]] = i;
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation &next) const {
    if (next.size() != size()) {
        throw Error(ErrorKind::DimensionMismatch, "composing permutations of different sizes");
    }
    std::vector<std::size_t> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        out[i] = next(image_[i]);
    }
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) {
            return false;
        }
    }
    return true;
}

Matrix Permutation::dense() const {
    const auto n = static_cast<Eigen::Index>(image_.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(static_cast<Eigen::Index>(image_[static_cast<std::size_t>(i)]), i) = 1.0;
    }
    return m;
}

ShiftOperator::ShiftOperator(std::vector<Permutation> per_coin) : per_coin_(std::move(per_coin)) {
    if (per_coin_.empty()) {
        throw Error(ErrorKind::InvalidDimension, "shift needs at least one coin state");
    }
    for (const auto &p : per_coin_) {
        if (p.size() != per_coin_.front().size()) {
            throw Error(ErrorKind::DimensionMismatch, "per-coin shift actions differ in size");
        }
    }
}

Matrix ShiftOperator::dense() const {
    const auto positions = static_cast<Eigen::Index>(position_dim());
    const auto n = positions * coin_dim();
    Matrix m = Matrix::Zero(n, n);
    for (int c = 0; c < coin_dim(); ++c) {
        m.block(c * positions, c * positions, positions, positions) = per_coin_[static_cast<std::size_t>(c)].dense();
    }
    return m;
}

namespace {

Permutation cyclic_offset(std::size_t n, std::size_t offset) {
    std::vector<std::size_t> image(n);
    for (std::size_t k = 0; k < n; ++k) {
        image[k] = (k + offset) % n;
    }
    return Permutation(std::move(image));
}

} // namespace

CycleShift make_cycle_shift(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxPositionQubits) {
        throw Error(ErrorKind::ResourceLimit,
                    "cycle position register must have 1.." + std::to_string(kMaxPositionQubits) +
                        " qubits, got " + std::to_string(n_qubits));
    }
    const std::size_t n = std::size_t{1} << n_qubits;
    Permutation inc = cyclic_offset(n, 1);
    Permutation dec = cyclic_offset(n, n - 1);
    ShiftOperator shift({inc, dec});
    return {std::move(inc), std::move(dec), std::move(shift)};
}

ShiftOperator make_cycle_shift_sites(std::size_t n_sites) {
    if (n_sites < 2) {
        throw Error(ErrorKind::InvalidDimension, "cycle needs at least 2 sites");
    }
    return ShiftOperator({cyclic_offset(n_sites, 1), cyclic_offset(n_sites, n_sites - 1)});
}

ShiftOperator make_torus_shift_2d(int lx, int ly) {
    if (lx < 2 || ly < 2) {
        throw Error(ErrorKind::InvalidDimension, "torus extents must be >= 2");
    }
    const auto positions = static_cast<std::size_t>(lx) * static_cast<std::size_t>(ly);
    std::vector<Permutation> per_coin;
    per_coin.reserve(kLatticeDirections);
    for (int c = 0; c < kLatticeDirections; ++c) {
        const Offset off = direction_offset(static_cast<Direction>(c));
        std::vector<std::size_t> image(positions);
        for (int y = 0; y < ly; ++y) {
            for (int x = 0; x < lx; ++x) {
                const int nx = (x + off.dx + lx) % lx;
                const int ny = (y + off.dy + ly) % ly;
                image[static_cast<std::size_t>(x + lx * y)] = static_cast<std::size_t>(nx + lx * ny);
            }
        }
        per_coin.emplace_back(std::move(image));
    }
    return ShiftOperator(std::move(per_coin));
}

ShiftOperator make_hypercube_shift(int d) {
    if (d < 1 || d > kMaxHypercubeDim) {
        throw Error(ErrorKind::ResourceLimit,
                    "hypercube dimension must be 1.." + std::to_string(kMaxHypercubeDim));
    }
    const std::size_t vertices = std::size_t{1} << d;
    std::vector<Permutation> per_coin;
    per_coin.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const std::size_t mask = std::size_t{1} << (d - 1 - j);
        std::vector<std::size_t> image(vertices);
        for (std::size_t v = 0; v < vertices; ++v) {
            image[v] = v ^ mask;
        }
        per_coin.emplace_back(std::move(image));
    }
    return ShiftOperator(std::move(per_coin));
}

EvolutionOperator::EvolutionOperator(CoinOperator coin, ShiftOperator shift)
    : coin_(std::move(coin)), shift_(std::move(shift)) {
    if (coin_.dim() != shift_.coin_dim()) {
        throw Error(ErrorKind::IncompatibleOperator,
                    "coin dimension " + std::to_string(coin_.dim()) + " does not match shift coin dimension " +
                        std::to_string(shift_.coin_dim()));
    }
}

void EvolutionOperator::apply(const Vector &in, Vector &out) const {
    if (static_cast<std::size_t>(in.size()) != dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state length does not match operator dimension");
    }
    const int cd = coin_dim();
    const std::size_t positions = position_dim();
    const Matrix &c = coin_.matrix();
    out.setZero(in.size());
    std::vector<Complex> column(static_cast<std::size_t>(cd));
    for (std::size_t pos = 0; pos < positions; ++pos) {
        bool any = false;
        for (int k = 0; k < cd; ++k) {
            column[static_cast<std::size_t>(k)] = in[static_cast<Eigen::Index>(k * positions + pos)];
            any = any || column[static_cast<std::size_t>(k)] != Complex{};
        }
        if (!any) {
            continue;
        }
        for (int r = 0; r < cd; ++r) {
            Complex acc{};
            for (int k = 0; k < cd; ++k) {
                acc += c(r, k) * column[static_cast<std::size_t>(k)];
            }
            const std::size_t target = shift_.action(r)(pos);
            out[static_cast<Eigen::Index>(r * positions + target)] += acc;
        }
    }
}

Matrix EvolutionOperator::dense() const {
    if (dim() > kMaxDenseDim) {
        throw Error(ErrorKind::ResourceLimit, "dense evolution operator too large");
    }
    const auto positions = static_cast<Eigen::Index>(position_dim());
    Matrix coin_lift = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (int r = 0; r < coin_dim(); ++r) {
        for (int k = 0; k < coin_dim(); ++k) {
            coin_lift.block(r * positions, k * positions, positions, positions) =
                coin_.matrix()(r, k) * Matrix::Identity(positions, positions);
        }
    }
    return shift_.dense() * coin_lift;
}

EvolutionOperator evolution_operator(CoinOperator coin, ShiftOperator shift) {
    return EvolutionOperator(std::move(coin), std::move(shift));
}

} // namespace qwepi::qwalk
