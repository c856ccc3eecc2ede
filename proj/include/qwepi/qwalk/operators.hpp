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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qwepi::qwalk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tolerance {
/// Exact algebra: operator entries, unitarity, single products.
inline constexpr double kAlgebraic = 1e-12;
/// Quantities accumulated over many steps: norms, summed probabilities.
inline constexpr double kAccumulated = 1e-10;
} // namespace tolerance

/// max_ij |(O^dagger O - I)_ij|
double unitarity_deviation(const Matrix &op);

/// Lattice directions for the two-qubit coin, indexed by coin basis state
/// |00>, |01>, |10>, |11>.
enum class Direction : int { MinusX = 0, MinusY = 1, PlusX = 2, PlusY = 3 };

inline constexpr int kLatticeDirections = 4;

struct Offset {
    int dx;
    int dy;
};

constexpr Offset direction_offset(Direction d) noexcept {
    switch (d) {
    case Direction::MinusX:
        return {-1, 0};
    case Direction::MinusY:
        return {0, -1};
    case Direction::PlusX:
        return {1, 0};
    case Direction::PlusY:
        return {0, 1};
    }
    return {0, 0};
}

constexpr Direction opposite(Direction d) noexcept {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

/// Unitary acting on the coin register. Immutable once built.
class CoinOperator {
  public:
    /// Throws InvalidDimension for a non-square or empty matrix and
    /// UnsupportedCoin when the matrix is not unitary to kAlgebraic.
    explicit CoinOperator(Matrix matrix);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
    [[nodiscard]] const Matrix &matrix() const noexcept { return matrix_; }

    [[nodiscard]] Vector apply(const Vector &coin_state) const;

  private:
    Matrix matrix_;
};

/// H for one coin qubit, H (x) H for two.
CoinOperator make_hadamard_coin(int qubits);

/// d x d discrete Fourier transform, entries omega^{jk} / sqrt(d).
CoinOperator make_dft_coin(int d);

/// DFT_3 padded to a two-qubit gate: DFT_3 in the leading 3x3 block and
/// |11> left fixed.
CoinOperator embed_dft3_gate();

CoinOperator make_identity_coin(int d);

/// Bijection on {0, ..., n-1}; image()[i] is where i is sent.
class Permutation {
  public:
    /// Throws InvalidDimension unless image is a bijection.
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t i) const { return image_[i]; }
    [[nodiscard]] std::span<const std::size_t> image() const noexcept { return image_; }

    [[nodiscard]] Permutation inverse() const;
    /// Apply *this first, then next.
    [[nodiscard]] Permutation then(const Permutation &next) const;
    [[nodiscard]] bool is_identity() const noexcept;

    /// Column i carries a single 1 in row image()[i].
    [[nodiscard]] Matrix dense() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;

  private:
    std::vector<std::size_t> image_;
};

/// Coin-conditioned position permutation. The induced joint matrix over the
/// coin-major basis (index = coin * position_dim + position) is
/// block-diagonal with one permutation block per coin state.
class ShiftOperator {
  public:
    explicit ShiftOperator(std::vector<Permutation> per_coin);

    [[nodiscard]] int coin_dim() const noexcept { return static_cast<int>(per_coin_.size()); }
    [[nodiscard]] std::size_t position_dim() const noexcept { return per_coin_.front().size(); }
    [[nodiscard]] const Permutation &action(int coin) const { return per_coin_.at(static_cast<std::size_t>(coin)); }

    [[nodiscard]] Matrix dense() const;

  private:
    std::vector<Permutation> per_coin_;
};

/// Increment/decrement on a cycle of 2^n sites and the conditional shift
/// S = |up><up| (x) INC + |down><down| (x) DEC.
struct CycleShift {
    Permutation inc;
    Permutation dec;
    ShiftOperator shift;
};

inline constexpr int kMaxPositionQubits = 20;

/// n_qubits in [1, kMaxPositionQubits]; otherwise ResourceLimit.
CycleShift make_cycle_shift(int n_qubits);

/// Same construction on a cycle of arbitrary length n_sites >= 2.
ShiftOperator make_cycle_shift_sites(std::size_t n_sites);

/// Two-qubit-coin shift on an lx x ly torus, position index x + lx * y.
ShiftOperator make_torus_shift_2d(int lx, int ly);

inline constexpr int kMaxHypercubeDim = 10;

/// Coin state j flips bit j of the vertex label counted from the most
/// significant end, so direction 0 takes |000> to |100>.
ShiftOperator make_hypercube_shift(int d = 3);

/// One walk step U = S (C (x) I), applied structurally in O(coin_dim^2 * positions).
class EvolutionOperator {
  public:
    EvolutionOperator(CoinOperator coin, ShiftOperator shift);

    [[nodiscard]] const CoinOperator &coin() const noexcept { return coin_; }
    [[nodiscard]] const ShiftOperator &shift() const noexcept { return shift_; }
    [[nodiscard]] int coin_dim() const noexcept { return coin_.dim(); }
    [[nodiscard]] std::size_t position_dim() const noexcept { return shift_.position_dim(); }
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(coin_dim()) * position_dim();
    }

    /// out = U in. Both vectors use the coin-major basis; out is resized.
    void apply(const Vector &in, Vector &out) const;

    /// Dense matrix; refuses (ResourceLimit) above kMaxDenseDim.
    [[nodiscard]] Matrix dense() const;

    static constexpr std::size_t kMaxDenseDim = 4096;

  private:
    CoinOperator coin_;
    ShiftOperator shift_;
};

/// Throws IncompatibleOperator when coin.dim() != shift.coin_dim().
EvolutionOperator evolution_operator(CoinOperator coin, ShiftOperator shift);

} // namespace qwepi::qwalk
