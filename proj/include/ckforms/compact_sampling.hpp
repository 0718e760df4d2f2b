#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ckforms/algebra.hpp"

namespace ckforms {

// one copy of K inside the realified matrices of g
enum class PieceKind {
  RealSO,         // SO(p) x SO(q) on real coordinates
  ComplexSU,      // S(U(p) x U(q)), complex entries as 2x2 blocks
  ComplexRealSO,  // SO(n) with real entries inside complex matrices
  ComplexSp,      // Sp(n) written as [[A, -conj B], [B, conj A]] in complex 2n x 2n
  QuaternionSp,   // Sp(p) x Sp(q), quaternion entries as 4x4 blocks
  ComplexUStar,   // U(n) as real [[X, Y], [-Y, X]] inside complex 2n x 2n
};

struct CompactPiece {
  PieceKind kind;
  int p = 0;
  int q = 0;
  std::size_t offset = 0;  // first realified coordinate
  std::size_t size = 0;    // realified size
};

struct CompactStructure {
  std::size_t matrix_size = 0;
  std::vector<CompactPiece> pieces;
};

CompactStructure compact_structure(const AlgebraSpec& spec);

using Rng = std::mt19937_64;

Eigen::MatrixXd haar_so(int n, Rng& rng);
Eigen::MatrixXcd haar_u(int n, Rng& rng);
// quaternionic unitary, returned in the left-multiplication realification (4n x 4n)
Eigen::MatrixXd haar_sp_real(int n, Rng& rng);
// same group in the complex 2n x 2n model [[A, -conj B], [B, conj A]]
Eigen::MatrixXcd haar_sp_complex(int n, Rng& rng);

Eigen::MatrixXd realify(const Eigen::MatrixXcd& z);

// Haar sample of K, realified; orthogonal
Eigen::MatrixXd sample_compact(const CompactStructure& k, Rng& rng);

// determinants that must equal 1 on K: one per SO block, one per S(U) piece, realified det otherwise
std::vector<std::complex<double>> factor_determinants(const CompactStructure& k, const Eigen::MatrixXd& u);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace ckforms
