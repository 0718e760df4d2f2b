#include "ckforms/compact_sampling.hpp"

#include <array>
#include <cmath>

#include "ckforms/errors.hpp"

namespace ckforms {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CompactStructure compact_structure(const AlgebraSpec& s) {
  CompactStructure cs;
  const std::size_t one = static_cast<std::size_t>(realified_size(s) / s.copies);
  cs.matrix_size = one * static_cast<std::size_t>(s.copies);
  for (int c = 0; c < s.copies; ++c) {
    CompactPiece piece{PieceKind::RealSO, 0, 0, one * static_cast<std::size_t>(c), one};
    const int a = s.params[0];
    const int b = s.params.size() > 1 ? s.params[1] : 0;
    switch (s.family) {
      case Family::SL_R: piece = {PieceKind::RealSO, a, 0, piece.offset, one}; break;
      case Family::SO: piece = {PieceKind::RealSO, a, b, piece.offset, one}; break;
      case Family::SL_C: piece = {PieceKind::ComplexSU, a, 0, piece.offset, one}; break;
      case Family::SU: piece = {PieceKind::ComplexSU, a, b, piece.offset, one}; break;
      case Family::SO_C: piece = {PieceKind::ComplexRealSO, a, 0, piece.offset, one}; break;
      case Family::SP_C: piece = {PieceKind::ComplexSp, a, 0, piece.offset, one}; break;
      case Family::SL_H: piece = {PieceKind::QuaternionSp, a, 0, piece.offset, one}; break;
      case Family::SP: piece = {PieceKind::QuaternionSp, a, b, piece.offset, one}; break;
      case Family::SOSTAR: piece = {PieceKind::ComplexUStar, a / 2, 0, piece.offset, one}; break;
    }
    cs.pieces.push_back(piece);
  }
  return cs;
}

namespace {

// fresh distribution each call: a cached spare value would leak between chunks
double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

struct Quat {
  double a = 0, b = 0, c = 0, d = 0;
};

Quat operator*(const Quat& x, const Quat& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}
Quat conj(const Quat& x) { return {x.a, -x.b, -x.c, -x.d}; }
Quat operator+(const Quat& x, const Quat& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Quat operator-(const Quat& x, const Quat& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Quat scale(const Quat& x, double s) { return {x.a * s, x.b * s, x.c * s, x.d * s}; }

// column-major n x n quaternion matrix with orthonormal columns, Gram-Schmidt on a Gaussian
std::vector<Quat> haar_sp_quat(int n, Rng& rng) {
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<Quat> q(m * m);
  for (auto& x : q) x = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  auto col = [&](std::size_t j, std::size_t i) -> Quat& { return q[j * m + i]; };
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Quat ip;
      for (std::size_t i = 0; i < m; ++i) ip = ip + conj(col(k, i)) * col(j, i);
      for (std::size_t i = 0; i < m; ++i) col(j, i) = col(j, i) - col(k, i) * ip;
    }
    double nrm = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Quat& x = col(j, i);
      nrm += x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
    }
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < m; ++i) col(j, i) = scale(col(j, i), 1.0 / nrm);
  }
  return q;
}

void put_quaternion(Eigen::MatrixXd& out, std::size_t r0, std::size_t c0, const Quat& x) {
  const std::array<std::array<double, 4>, 4> l{{{x.a, -x.b, -x.c, -x.d},
                                                {x.b, x.a, -x.d, x.c},
                                                {x.c, x.d, x.a, -x.b},
                                                {x.d, -x.c, x.b, x.a}}};
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) out(static_cast<Eigen::Index>(r0 + s), static_cast<Eigen::Index>(c0 + t)) = l[s][t];
}

Eigen::MatrixXcd su_fix(Eigen::MatrixXcd u) {
  const std::complex<double> det = u.determinant();
  const double n = static_cast<double>(u.rows());
  u *= std::polar(1.0, -std::arg(det) / n);
  return u;
}

}  // namespace

Eigen::MatrixXd haar_so(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (n > 0 && q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

Eigen::MatrixXcd haar_u(int n, Rng& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = {gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

Eigen::MatrixXd haar_sp_real(int n, Rng& rng) {
  const auto q = haar_sp_quat(n, rng);
  const std::size_t m = static_cast<std::size_t>(n);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(4 * n, 4 * n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) put_quaternion(out, 4 * i, 4 * j, q[j * m + i]);
  return out;
}

Eigen::MatrixXcd haar_sp_complex(int n, Rng& rng) {
  // q = A + j B with A = q0 + q1 i, B = q2 - q3 i
  const auto q = haar_sp_quat(n, rng);
  const std::size_t m = static_cast<std::size_t>(n);
  Eigen::MatrixXcd out(2 * n, 2 * n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const Quat& x = q[j * m + i];
      const std::complex<double> a{x.a, x.b}, b{x.c, -x.d};
      const auto I = static_cast<Eigen::Index>(i), J = static_cast<Eigen::Index>(j), N = static_cast<Eigen::Index>(n);
      out(I, J) = a;
      out(I, J + N) = -std::conj(b);
      out(I + N, J) = b;
      out(I + N, J + N) = std::conj(a);
    }
  return out;
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& z) {
  Eigen::MatrixXd out(2 * z.rows(), 2 * z.cols());
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      out(2 * i, 2 * j) = z(i, j).real();
      out(2 * i, 2 * j + 1) = -z(i, j).imag();
      out(2 * i + 1, 2 * j) = z(i, j).imag();
      out(2 * i + 1, 2 * j + 1) = z(i, j).real();
    }
  return out;
}

Eigen::MatrixXd sample_compact(const CompactStructure& k, Rng& rng) {
  const auto N = static_cast<Eigen::Index>(k.matrix_size);
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(N, N);
  for (const auto& piece : k.pieces) {
    const auto off = static_cast<Eigen::Index>(piece.offset);
    const auto sz = static_cast<Eigen::Index>(piece.size);
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(sz, sz);
    switch (piece.kind) {
      case PieceKind::RealSO:
        block.topLeftCorner(piece.p, piece.p) = haar_so(piece.p, rng);
        if (piece.q > 0) block.bottomRightCorner(piece.q, piece.q) = haar_so(piece.q, rng);
        break;
      case PieceKind::ComplexSU: {
        Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(piece.p + piece.q, piece.p + piece.q);
        z.topLeftCorner(piece.p, piece.p) = haar_u(piece.p, rng);
        if (piece.q > 0) z.bottomRightCorner(piece.q, piece.q) = haar_u(piece.q, rng);
        block = realify(su_fix(z));
        break;
      }
      case PieceKind::ComplexRealSO:
        block = realify(haar_so(piece.p, rng).cast<std::complex<double>>());
        break;
      case PieceKind::ComplexSp:
        block = realify(haar_sp_complex(piece.p, rng));
        break;
      case PieceKind::QuaternionSp:
        block.topLeftCorner(4 * piece.p, 4 * piece.p) = haar_sp_real(piece.p, rng);
        if (piece.q > 0) block.bottomRightCorner(4 * piece.q, 4 * piece.q) = haar_sp_real(piece.q, rng);
        break;
      case PieceKind::ComplexUStar: {
        const Eigen::MatrixXcd w = haar_u(piece.p, rng);
        const int n = piece.p;
        Eigen::MatrixXd r(2 * n, 2 * n);
        r << w.real(), w.imag(), -w.imag(), w.real();
        block = realify(r.cast<std::complex<double>>());
        break;
      }
    }
    u.block(off, off, sz, sz) = block;
  }
  return u;
}

std::vector<std::complex<double>> factor_determinants(const CompactStructure& k, const Eigen::MatrixXd& u) {
  std::vector<std::complex<double>> out;
  for (const auto& piece : k.pieces) {
    const auto off = static_cast<Eigen::Index>(piece.offset);
    const auto sz = static_cast<Eigen::Index>(piece.size);
    const Eigen::MatrixXd b = u.block(off, off, sz, sz);
    switch (piece.kind) {
      case PieceKind::RealSO:
        out.emplace_back(b.topLeftCorner(piece.p, piece.p).determinant());
        if (piece.q > 0) out.emplace_back(b.bottomRightCorner(piece.q, piece.q).determinant());
        break;
      case PieceKind::ComplexSU: {
        const Eigen::Index n = piece.p + piece.q;
        Eigen::MatrixXcd z(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) z(i, j) = {b(2 * i, 2 * j), b(2 * i + 1, 2 * j)};
        out.push_back(z.determinant());
        break;
      }
      case PieceKind::ComplexRealSO: {
        Eigen::MatrixXd r(piece.p, piece.p);
        for (int i = 0; i < piece.p; ++i)
          for (int j = 0; j < piece.p; ++j) r(i, j) = b(2 * i, 2 * j);
        out.emplace_back(r.determinant());
        break;
      }
      default: out.emplace_back(b.determinant()); break;
    }
  }
  return out;
}

}  // namespace ckforms
