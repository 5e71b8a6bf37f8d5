// Copyright 2026 The qpcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPC_STATEVECTOR_HPP
#define QPC_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qpc/rng.hpp"

namespace qpc {

using Complex = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
/// Every operation must leave |norm^2 - 1| below this bound.
inline constexpr double kNormTolerance = 1e-9;
/// Default tolerance for up-to-global-phase state comparison.
inline constexpr double kPhaseTolerance = 1e-12;

// The four Bell states. The enum value is the two-bit code:
// PhiPlus -> 00, PhiMinus -> 01, PsiPlus -> 10, PsiMinus -> 11.
enum class BellKind : uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

constexpr uint8_t bell_code(BellKind k) { return static_cast<uint8_t>(k); }
constexpr BellKind bell_from_code(uint8_t code) { return static_cast<BellKind>(code & 3u); }
constexpr bool is_phi(BellKind k) { return k == BellKind::PhiPlus || k == BellKind::PhiMinus; }
std::string_view bell_name(BellKind k);

enum class PauliOp : uint8_t { I, X, Z, iY };

// Exact state vector over up to 8 qubits. Amplitude index bits are
// big-endian in the qubit order: qubit 0 is the most significant bit of the
// basis index, so |q0 q1 ... q_{n-1}> has index q0*2^{n-1} + ... + q_{n-1}.
//
// Values are immutable once constructed; operations below return fresh
// states. A 0-qubit register (dimension 1, amplitude of modulus 1) is the
// residue of measuring out an entire register.
class StateVector {
  public:
    static constexpr uint32_t kMaxQubits = 8;

    /// |0...0> on `num_qubits` qubits (the 0-qubit state for 0).
    explicit StateVector(uint32_t num_qubits = 0);

    /// Validates length 2^num_qubits and unit norm (within kNormTolerance).
    static StateVector from_amplitudes(uint32_t num_qubits, std::vector<Complex> amps);

    uint32_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(size_t basis_index) const { return amps_.at(basis_index); }
    double norm_squared() const;

    /// Value of `qubit` in the given basis index (big-endian convention).
    int basis_bit(size_t basis_index, uint32_t qubit) const;

  private:
    uint32_t num_qubits_;
    std::vector<Complex> amps_;
};

struct MeasurementResult {
    int outcome;             // 0/1; for X basis 0 is |+>, 1 is |->
    StateVector post_state;  // measured qubit removed, renormalized
};

struct BellMeasurementResult {
    BellKind outcome;
    StateVector post_state;  // measured pair removed, renormalized
};

StateVector prepare_bell(BellKind kind);
StateVector prepare_ghz3();
StateVector prepare_chi00();

/// Kronecker product; b's qubits follow a's. Throws if the result exceeds 8 qubits.
StateVector tensor(const StateVector& a, const StateVector& b);

StateVector apply_pauli(const StateVector& s, uint32_t qubit, PauliOp op);

MeasurementResult measure_z(const StateVector& s, uint32_t qubit, Rng& rng);
MeasurementResult measure_x(const StateVector& s, uint32_t qubit, Rng& rng);

/// Bell-basis measurement of the ordered pair (q1, q2); both qubits leave the register.
BellMeasurementResult measure_bell(const StateVector& s, uint32_t q1, uint32_t q2, Rng& rng);

/// True iff a == e^{i theta} b for some global phase, within tol per amplitude.
bool states_equal_up_to_phase(const StateVector& a, const StateVector& b,
                              double tol = kPhaseTolerance);

}  // namespace qpc

#endif
