#include "gmbqc/pauli.hpp"

#include <array>
#include <cmath>

#include "gmbqc/errors.hpp"

namespace gmbqc {

namespace {

constexpr char kLetterChars[] = {'I', 'X', 'Y', 'Z'};

// Single-qubit product: a*b = i^exp * r. Indexed [a][b] -> {exp mod 4, r}.
struct LetterProduct {
  int exp;
  uint8_t r;
};
constexpr LetterProduct kProduct[4][4] = {
    // I            X            Y            Z
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}},  // I*
    {{0, 1}, {0, 0}, {1, 3}, {3, 2}},  // X*: XY=iZ, XZ=-iY
    {{0, 2}, {3, 3}, {0, 0}, {1, 1}},  // Y*: YX=-iZ, YZ=iX
    {{0, 3}, {1, 2}, {3, 1}, {0, 0}},  // Z*: ZX=iY, ZY=-iX
};

// Conjugation action per gate: letter -> (letter, sign flip).
struct LetterImage {
  uint8_t letter;
  bool flip;
};
LetterImage conj_table(Gate g, uint8_t letter) {
  if (letter == 0) return {0, false};
  switch (g) {
    case Gate::X:
      return {letter, letter != 1};  // flips Y, Z
    case Gate::Y:
      return {letter, letter != 2};
    case Gate::Z:
      return {letter, letter != 3};
    case Gate::H:
      switch (letter) {
        case 1: return {3, false};  // X -> Z
        case 2: return {2, true};   // Y -> -Y
        default: return {1, false}; // Z -> X
      }
    case Gate::S:
      switch (letter) {
        case 1: return {2, false};  // X -> Y
        case 2: return {1, true};   // Y -> -X
        default: return {3, false};
      }
    case Gate::A:
      switch (letter) {
        case 1: return {2, false};  // X -> Y
        case 2: return {1, false};  // Y -> X
        default: return {3, true};  // Z -> -Z
      }
  }
  throw InvariantError("conj_table: bad gate");
}

}  // namespace

Gate gate_from_name(const std::string& name) {
  if (name == "X") return Gate::X;
  if (name == "Y") return Gate::Y;
  if (name == "Z") return Gate::Z;
  if (name == "H") return Gate::H;
  if (name == "S") return Gate::S;
  if (name == "A") return Gate::A;
  throw InvariantError("unknown gate name: " + name);
}

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::A: return "A";
  }
  return "?";
}

PauliObservable PauliObservable::parse(const std::string& text) {
  std::size_t pos = 0;
  bool sign = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-';
    ++pos;
  }
  std::vector<PauliLetter> letters;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': letters.push_back(PauliLetter::I); break;
      case 'X': letters.push_back(PauliLetter::X); break;
      case 'Y': letters.push_back(PauliLetter::Y); break;
      case 'Z': letters.push_back(PauliLetter::Z); break;
      default:
        throw InvariantError("bad Pauli string: " + text);
    }
  }
  if (letters.empty()) throw InvariantError("empty Pauli string");
  return PauliObservable(std::move(letters), sign);
}

std::string PauliObservable::to_string() const {
  std::string s;
  s.reserve(n_qubits() + 1);
  s.push_back(sign_ ? '-' : '+');
  for (auto l : letters_) s.push_back(kLetterChars[static_cast<int>(l)]);
  return s;
}

bool PauliObservable::is_identity() const {
  for (auto l : letters_)
    if (l != PauliLetter::I) return false;
  return true;
}

std::complex<double> PauliProduct::phase() const {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((phase_exponent % 4) + 4) % 4];
}

PauliProduct multiply(const PauliObservable& p, const PauliObservable& q) {
  if (p.n_qubits() != q.n_qubits())
    throw InvariantError("multiply: qubit count mismatch");
  int exp = (p.sign() ? 2 : 0) + (q.sign() ? 2 : 0);
  std::vector<PauliLetter> letters(p.n_qubits());
  for (std::size_t i = 0; i < p.n_qubits(); ++i) {
    const auto& lp = kProduct[static_cast<int>(p.letter(i))]
                             [static_cast<int>(q.letter(i))];
    exp += lp.exp;
    letters[i] = static_cast<PauliLetter>(lp.r);
  }
  return PauliProduct{exp % 4, PauliObservable(std::move(letters), false)};
}

bool commutes(const PauliObservable& p, const PauliObservable& q) {
  if (p.n_qubits() != q.n_qubits())
    throw InvariantError("commutes: qubit count mismatch");
  int anti = 0;
  for (std::size_t i = 0; i < p.n_qubits(); ++i) {
    auto a = p.letter(i), b = q.letter(i);
    if (a != PauliLetter::I && b != PauliLetter::I && a != b) ++anti;
  }
  return (anti % 2) == 0;
}

PauliObservable conjugate(const PauliObservable& p, const Circuit& circuit) {
  auto letters = p.letters();
  bool sign = p.sign();
  for (const auto& [gate, qubit] : circuit) {
    if (qubit >= letters.size())
      throw InvariantError("conjugate: qubit index out of range");
    auto img = conj_table(gate, static_cast<uint8_t>(letters[qubit]));
    letters[qubit] = static_cast<PauliLetter>(img.letter);
    sign ^= img.flip;
  }
  return PauliObservable(std::move(letters), sign);
}

DenseMatrix to_matrix(const PauliObservable& p) {
  if (p.n_qubits() > 12) throw SizeGuardError("to_matrix: > 12 qubits");
  using C = std::complex<double>;
  static const C mats[4][2][2] = {
      {{C(1), C(0)}, {C(0), C(1)}},         // I
      {{C(0), C(1)}, {C(1), C(0)}},         // X
      {{C(0), C(0, -1)}, {C(0, 1), C(0)}},  // Y
      {{C(1), C(0)}, {C(0), C(-1)}},        // Z
  };
  std::size_t dim = std::size_t(1) << p.n_qubits();
  DenseMatrix m(dim, std::vector<C>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      C v(1, 0);
      for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        // Qubit 0 is the most significant bit of the basis index.
        std::size_t shift = p.n_qubits() - 1 - q;
        int rb = (r >> shift) & 1, cb = (c >> shift) & 1;
        v *= mats[static_cast<int>(p.letter(q))][rb][cb];
        if (v == C(0, 0)) break;
      }
      m[r][c] = p.sign() ? -v : v;
    }
  }
  return m;
}

DenseMatrix gate_matrix(Gate g) {
  using C = std::complex<double>;
  const double s = 1.0 / std::sqrt(2.0);
  switch (g) {
    case Gate::X: return {{C(0), C(1)}, {C(1), C(0)}};
    case Gate::Y: return {{C(0), C(0, -1)}, {C(0, 1), C(0)}};
    case Gate::Z: return {{C(1), C(0)}, {C(0), C(-1)}};
    case Gate::H: return {{C(s), C(s)}, {C(s), C(-s)}};
    case Gate::S: return {{C(1), C(0)}, {C(0), C(0, 1)}};
    case Gate::A:
      // (X+Y)/sqrt(2)
      return {{C(0), C(s, -s)}, {C(s, s), C(0)}};
  }
  throw InvariantError("gate_matrix: bad gate");
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  DenseMatrix r(n, std::vector<std::complex<double>>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      auto v = a[i][l];
      if (v == std::complex<double>(0, 0)) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += v * b[l][j];
    }
  return r;
}

DenseMatrix dagger(const DenseMatrix& a) {
  std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  DenseMatrix r(m, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = std::conj(a[i][j]);
  return r;
}

DenseMatrix circuit_unitary(const Circuit& circuit, std::size_t n_qubits) {
  if (n_qubits > 12) throw SizeGuardError("circuit_unitary: > 12 qubits");
  std::size_t dim = std::size_t(1) << n_qubits;
  DenseMatrix u(dim, std::vector<std::complex<double>>(dim));
  for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;
  for (const auto& [gate, qubit] : circuit) {
    if (qubit >= n_qubits)
      throw InvariantError("circuit_unitary: qubit index out of range");
    auto g = gate_matrix(gate);
    // Embed single-qubit gate and left-multiply.
    DenseMatrix full(dim, std::vector<std::complex<double>>(dim));
    std::size_t shift = n_qubits - 1 - qubit;
    for (std::size_t r = 0; r < dim; ++r) {
      int rb = (r >> shift) & 1;
      for (int cb = 0; cb < 2; ++cb) {
        std::size_t c = (r & ~(std::size_t(1) << shift)) |
                        (std::size_t(cb) << shift);
        full[r][c] = g[rb][cb];
      }
    }
    u = matmul(full, u);
  }
  return u;
}

}  // namespace gmbqc
