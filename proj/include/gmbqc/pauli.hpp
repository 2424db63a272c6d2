#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gmbqc {

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Single-qubit Clifford-like gates whose conjugation action on {X,Y,Z} is a
// signed permutation. A = (X+Y)/sqrt(2).
enum class Gate : uint8_t { X, Y, Z, H, S, A };

Gate gate_from_name(const std::string& name);
std::string gate_name(Gate g);

using GateOp = std::pair<Gate, std::size_t>;  // (gate, qubit)
using Circuit = std::vector<GateOp>;

// Hermitian n-qubit Pauli observable with eigenvalues +-1:
// (-1)^sign * letters[0] (x) letters[1] (x) ... (x) letters[n-1].
class PauliObservable {
 public:
  PauliObservable() = default;
  explicit PauliObservable(std::size_t n_qubits)
      : letters_(n_qubits, PauliLetter::I) {}
  PauliObservable(std::vector<PauliLetter> letters, bool sign)
      : letters_(std::move(letters)), sign_(sign) {}

  static PauliObservable identity(std::size_t n_qubits) {
    return PauliObservable(n_qubits);
  }
  // Parses "+XXY", "-YIZ", "XIZ" (sign optional).
  static PauliObservable parse(const std::string& text);
  std::string to_string() const;  // always with explicit sign prefix

  std::size_t n_qubits() const { return letters_.size(); }
  PauliLetter letter(std::size_t q) const { return letters_[q]; }
  bool sign() const { return sign_; }
  void set_sign(bool s) { sign_ = s; }
  const std::vector<PauliLetter>& letters() const { return letters_; }
  bool is_identity() const;

  // Letters equal, sign ignored.
  bool same_letters(const PauliObservable& o) const {
    return letters_ == o.letters_;
  }
  bool operator==(const PauliObservable& o) const {
    return sign_ == o.sign_ && letters_ == o.letters_;
  }

 private:
  std::vector<PauliLetter> letters_;
  bool sign_ = false;
};

// P*Q = i^phase_exponent * R, with R's sign bit zero. For commuting Hermitian
// operands the exponent is 0 or 2 (phase +-1).
struct PauliProduct {
  int phase_exponent;  // mod 4
  PauliObservable result;
  std::complex<double> phase() const;
};
PauliProduct multiply(const PauliObservable& p, const PauliObservable& q);

bool commutes(const PauliObservable& p, const PauliObservable& q);

// u P u^dagger for the circuit u; gates applied in list order.
PauliObservable conjugate(const PauliObservable& p, const Circuit& circuit);

using DenseMatrix = std::vector<std::vector<std::complex<double>>>;

// Dense 2^n x 2^n matrix; verification oracle, capped at 12 qubits.
DenseMatrix to_matrix(const PauliObservable& p);
DenseMatrix gate_matrix(Gate g);
DenseMatrix circuit_unitary(const Circuit& circuit, std::size_t n_qubits);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dagger(const DenseMatrix& a);

}  // namespace gmbqc
