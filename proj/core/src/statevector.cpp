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

#include "qpc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpc {

namespace {

// Probabilities this close to 0 or 1 are treated as exact. All protocol
// states have outcome probabilities in {0, 1/4, 1/2, 3/4, 1}, far from this.
constexpr double kProbSnap = 1e-12;

void ensure_normalized(const std::vector<Complex>& amps) {
    double n2 = 0.0;
    for (const Complex& a : amps) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::logic_error("state norm invariant violated: |psi|^2 = " + std::to_string(n2));
    }
}

uint32_t shift_of(uint32_t num_qubits, uint32_t qubit) {
    return num_qubits - 1 - qubit;
}

/// Drops the bit at `shift` from an index, closing the gap.
size_t drop_bit(size_t index, uint32_t shift) {
    const size_t low = index & ((size_t{1} << shift) - 1);
    const size_t high = (index >> (shift + 1)) << shift;
    return high | low;
}

StateVector collapse_to_bit(const StateVector& s, uint32_t qubit, int outcome, double prob) {
    const uint32_t n = s.num_qubits();
    const uint32_t shift = shift_of(n, qubit);
    const double scale = 1.0 / std::sqrt(prob);
    std::vector<Complex> post(s.dim() / 2, Complex{0.0, 0.0});
    for (size_t i = 0; i < s.dim(); ++i) {
        if (((i >> shift) & 1) == static_cast<size_t>(outcome)) {
            post[drop_bit(i, shift)] = s.amplitudes()[i] * scale;
        }
    }
    return StateVector::from_amplitudes(n - 1, std::move(post));
}

int sample_bit(const StateVector& s, uint32_t qubit, Rng& rng, double* prob_out) {
    const uint32_t shift = shift_of(s.num_qubits(), qubit);
    double p1 = 0.0;
    for (size_t i = 0; i < s.dim(); ++i) {
        if ((i >> shift) & 1) p1 += std::norm(s.amplitudes()[i]);
    }
    p1 = std::clamp(p1, 0.0, 1.0);
    int outcome;
    if (p1 <= kProbSnap) {
        outcome = 0;
    } else if (p1 >= 1.0 - kProbSnap) {
        outcome = 1;
    } else {
        outcome = rng.next_double() < p1 ? 1 : 0;
    }
    *prob_out = outcome ? p1 : 1.0 - p1;
    return outcome;
}

StateVector hadamard_on(const StateVector& s, uint32_t qubit) {
    const uint32_t shift = shift_of(s.num_qubits(), qubit);
    std::vector<Complex> out(s.dim());
    for (size_t i = 0; i < s.dim(); ++i) {
        if ((i >> shift) & 1) continue;
        const size_t j = i | (size_t{1} << shift);
        out[i] = (s.amplitudes()[i] + s.amplitudes()[j]) * kInvSqrt2;
        out[j] = (s.amplitudes()[i] - s.amplitudes()[j]) * kInvSqrt2;
    }
    return StateVector::from_amplitudes(s.num_qubits(), std::move(out));
}

}  // namespace

std::string_view bell_name(BellKind k) {
    switch (k) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

StateVector::StateVector(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubits) throw std::length_error("register exceeds 8 qubits");
    amps_.assign(size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(uint32_t num_qubits, std::vector<Complex> amps) {
    if (num_qubits > kMaxQubits) throw std::length_error("register exceeds 8 qubits");
    if (amps.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude vector length must be 2^num_qubits");
    }
    ensure_normalized(amps);
    StateVector s(0);
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(amps);
    return s;
}

double StateVector::norm_squared() const {
    double n2 = 0.0;
    for (const Complex& a : amps_) n2 += std::norm(a);
    return n2;
}

int StateVector::basis_bit(size_t basis_index, uint32_t qubit) const {
    if (qubit >= num_qubits_) throw std::out_of_range("qubit index out of range");
    return static_cast<int>((basis_index >> shift_of(num_qubits_, qubit)) & 1);
}

StateVector prepare_bell(BellKind kind) {
    std::vector<Complex> amps(4, Complex{0.0, 0.0});
    switch (kind) {
        case BellKind::PhiPlus:
            amps[0b00] = kInvSqrt2;
            amps[0b11] = kInvSqrt2;
            break;
        case BellKind::PhiMinus:
            amps[0b00] = kInvSqrt2;
            amps[0b11] = -kInvSqrt2;
            break;
        case BellKind::PsiPlus:
            amps[0b01] = kInvSqrt2;
            amps[0b10] = kInvSqrt2;
            break;
        case BellKind::PsiMinus:
            amps[0b01] = kInvSqrt2;
            amps[0b10] = -kInvSqrt2;
            break;
    }
    return StateVector::from_amplitudes(2, std::move(amps));
}

StateVector prepare_ghz3() {
    std::vector<Complex> amps(8, Complex{0.0, 0.0});
    amps[0b000] = kInvSqrt2;
    amps[0b111] = kInvSqrt2;
    return StateVector::from_amplitudes(3, std::move(amps));
}

StateVector prepare_chi00() {
    // (|00>|phi+> + |11>|phi-> - |01>|psi-> + |10>|psi+>) / 2, qubits (1,2,3,4).
    const double c = 0.5 * kInvSqrt2;
    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    amps[0b0000] = c;
    amps[0b0011] = c;
    amps[0b1100] = c;
    amps[0b1111] = -c;
    amps[0b0101] = -c;
    amps[0b0110] = c;
    amps[0b1001] = c;
    amps[0b1010] = c;
    return StateVector::from_amplitudes(4, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const uint32_t n = a.num_qubits() + b.num_qubits();
    if (n > StateVector::kMaxQubits) throw std::length_error("tensor product exceeds 8 qubits");
    std::vector<Complex> out(size_t{1} << n);
    const size_t db = b.dim();
    for (size_t i = 0; i < a.dim(); ++i) {
        for (size_t j = 0; j < db; ++j) {
            out[i * db + j] = a.amplitudes()[i] * b.amplitudes()[j];
        }
    }
    return StateVector::from_amplitudes(n, std::move(out));
}

StateVector apply_pauli(const StateVector& s, uint32_t qubit, PauliOp op) {
    if (qubit >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
    if (op == PauliOp::I) return s;
    const uint32_t shift = shift_of(s.num_qubits(), qubit);
    std::vector<Complex> out(s.dim());
    for (size_t i = 0; i < s.dim(); ++i) {
        if ((i >> shift) & 1) continue;
        const size_t j = i | (size_t{1} << shift);
        const Complex a0 = s.amplitudes()[i];
        const Complex a1 = s.amplitudes()[j];
        switch (op) {
            case PauliOp::X:
                out[i] = a1;
                out[j] = a0;
                break;
            case PauliOp::Z:
                out[i] = a0;
                out[j] = -a1;
                break;
            case PauliOp::iY:  // iY = |0><1| - |1><0|
                out[i] = a1;
                out[j] = -a0;
                break;
            case PauliOp::I:
                break;
        }
    }
    return StateVector::from_amplitudes(s.num_qubits(), std::move(out));
}

MeasurementResult measure_z(const StateVector& s, uint32_t qubit, Rng& rng) {
    if (qubit >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
    double prob = 0.0;
    const int outcome = sample_bit(s, qubit, rng, &prob);
    return {outcome, collapse_to_bit(s, qubit, outcome, prob)};
}

MeasurementResult measure_x(const StateVector& s, uint32_t qubit, Rng& rng) {
    if (qubit >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
    // H maps |+>/|-> to |0>/|1>; measuring Z afterwards realizes the X basis,
    // and the measured qubit leaves the register so no rotation back is needed.
    const StateVector rotated = hadamard_on(s, qubit);
    double prob = 0.0;
    const int outcome = sample_bit(rotated, qubit, rng, &prob);
    return {outcome, collapse_to_bit(rotated, qubit, outcome, prob)};
}

BellMeasurementResult measure_bell(const StateVector& s, uint32_t q1, uint32_t q2, Rng& rng) {
    const uint32_t n = s.num_qubits();
    if (q1 >= n || q2 >= n) throw std::out_of_range("qubit index out of range");
    if (q1 == q2) throw std::invalid_argument("Bell measurement needs two distinct qubits");

    const uint32_t s1 = shift_of(n, q1);
    const uint32_t s2 = shift_of(n, q2);
    const uint32_t hi = std::max(s1, s2);
    const uint32_t lo = std::min(s1, s2);
    const size_t rest_dim = size_t{1} << (n - 2);

    // Group amplitudes by the residual index r: pair[b1*2+b2][r].
    std::vector<std::vector<Complex>> pair(4, std::vector<Complex>(rest_dim, Complex{0.0, 0.0}));
    for (size_t i = 0; i < s.dim(); ++i) {
        const int b1 = static_cast<int>((i >> s1) & 1);
        const int b2 = static_cast<int>((i >> s2) & 1);
        const size_t r = drop_bit(drop_bit(i, hi), lo);
        pair[b1 * 2 + b2][r] = s.amplitudes()[i];
    }

    // <bell_k | pair> per residual index.
    std::vector<std::vector<Complex>> coef(4, std::vector<Complex>(rest_dim));
    double probs[4] = {0, 0, 0, 0};
    for (size_t r = 0; r < rest_dim; ++r) {
        const Complex c00 = pair[0][r], c01 = pair[1][r], c10 = pair[2][r], c11 = pair[3][r];
        coef[0][r] = (c00 + c11) * kInvSqrt2;
        coef[1][r] = (c00 - c11) * kInvSqrt2;
        coef[2][r] = (c01 + c10) * kInvSqrt2;
        coef[3][r] = (c01 - c10) * kInvSqrt2;
        for (int k = 0; k < 4; ++k) probs[k] += std::norm(coef[k][r]);
    }

    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
        if (probs[k] < kProbSnap) probs[k] = 0.0;
        total += probs[k];
    }
    const double u = rng.next_double() * total;
    int outcome = 3;
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        acc += probs[k];
        if (u < acc && probs[k] > 0.0) {
            outcome = k;
            break;
        }
    }
    if (probs[outcome] == 0.0) {  // u landed past the last nonzero bin
        for (int k = 3; k >= 0; --k) {
            if (probs[k] > 0.0) {
                outcome = k;
                break;
            }
        }
    }

    const double scale = 1.0 / std::sqrt(probs[outcome]);
    std::vector<Complex> post(rest_dim);
    for (size_t r = 0; r < rest_dim; ++r) post[r] = coef[outcome][r] * scale;
    return {static_cast<BellKind>(outcome), StateVector::from_amplitudes(n - 2, std::move(post))};
}

bool states_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state comparison needs equal qubit counts");
    }
    size_t ref = 0;
    double best = 0.0;
    for (size_t i = 0; i < b.dim(); ++i) {
        const double m = std::abs(b.amplitudes()[i]);
        if (m > best) {
            best = m;
            ref = i;
        }
    }
    if (best <= tol) return true;  // both (near) zero vectors
    const Complex phase = a.amplitudes()[ref] / b.amplitudes()[ref];
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    for (size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a.amplitudes()[i] - phase * b.amplitudes()[i]) > tol) return false;
    }
    return true;
}

}  // namespace qpc
