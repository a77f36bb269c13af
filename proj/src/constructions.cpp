// Copyright 2026 The ueb Authors
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

#include "ueb/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

namespace ueb {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

cplx root_of_unity(int k, int power) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(power % k) / k);
}

StateSet gate(StateSet set, BasisKind kind, Outcome expected) {
    const BasisVerdict v = verify_basis(set, kind);
    if (v.outcome != expected || v.grade != Grade::Exact) {
        throw GateError(set.name() + ": expected " + to_string(expected) + " (" + to_string(kind) +
                        ", exact), verifier returned " + to_string(v.outcome) + " (" +
                        to_string(v.grade) + "): " + v.reason);
    }
    return set;
}

std::string bits_of(unsigned value, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((value >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::string flipped(std::string s) {
    for (char& c : s) c = c == '0' ? '1' : '0';
    return s;
}

void check_strings(const std::vector<std::string>& strings) {
    if (strings.empty()) throw std::invalid_argument("superposition: no strings");
    std::set<std::string> seen;
    for (const auto& s : strings) {
        if (s.size() != strings.front().size()) throw std::invalid_argument("superposition: ragged strings");
        if (!seen.insert(s).second) throw std::invalid_argument("superposition: duplicate string " + s);
    }
}

CVector column(std::initializer_list<cplx> xs) {
    CVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (cplx x : xs) v[i++] = x;
    return v;
}

bool is_orthonormal_pair(const QubitBasis& b) {
    return b.first.size() == 2 && b.second.size() == 2 && std::abs(b.first.norm() - 1.0) < 1e-9 &&
           std::abs(b.second.norm() - 1.0) < 1e-9 && std::abs(b.first.dot(b.second)) < 1e-9;
}

}  // namespace

PureState qubit_state(std::initializer_list<std::pair<std::string_view, cplx>> terms) {
    if (terms.size() == 0) throw std::invalid_argument("qubit_state: no terms");
    const QuditDims dims = QuditDims::qubits(static_cast<int>(terms.begin()->first.size()));
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
    for (const auto& [bits, amp] : terms) {
        const PureState ket = PureState::ket(bits);
        if (!(ket.dims() == dims)) throw DimensionMismatch("qubit_state: mixed string lengths");
        v += amp * ket.amps();
    }
    return PureState(dims, std::move(v));
}

StateSet two_qubit_ueb_real() {
    const double r = kInvSqrt3;
    std::vector<PureState> states{
        qubit_state({{"00", r}, {"01", r}, {"10", r}}),
        qubit_state({{"01", kInvSqrt2}, {"10", -kInvSqrt2}}),
        qubit_state({{"00", r * std::numbers::sqrt2}, {"01", -r * kInvSqrt2}, {"10", -r * kInvSqrt2}}),
    };
    return gate(StateSet(QuditDims{2, 2}, std::move(states), "eq1-ueb"), BasisKind::Ueb, Outcome::Verified);
}

StateSet two_qubit_ueb_fourier() {
    const double r = kInvSqrt3;
    const cplx w = root_of_unity(3, 1), w2 = root_of_unity(3, 2);
    std::vector<PureState> states{
        qubit_state({{"00", r}, {"01", r}, {"10", r}}),
        qubit_state({{"00", r}, {"01", r * w}, {"10", r * w2}}),
        qubit_state({{"00", r}, {"01", r * w2}, {"10", r * w}}),
    };
    return gate(StateSet(QuditDims{2, 2}, std::move(states), "eq2-ueb"), BasisKind::Ueb, Outcome::Verified);
}

QubitBasis QubitBasis::computational() { return {column({1.0, 0.0}), column({0.0, 1.0})}; }

GeneralUeb two_qubit_ueb_general(const QubitBasis& local_a, const QubitBasis& local_b,
                                 const QubitBasis& local_b_primed, const VerifyOptions& opts) {
    if (!is_orthonormal_pair(local_a) || !is_orthonormal_pair(local_b) || !is_orthonormal_pair(local_b_primed)) {
        throw std::invalid_argument("two_qubit_ueb_general: local pairs must be orthonormal");
    }
    const QuditDims dims{2, 2};
    const CVector p0 = kron(local_a.first, local_b.first);
    const CVector p1 = kron(local_a.first, local_b.second);
    const CVector p2 = kron(local_a.second, local_b_primed.first);
    std::vector<PureState> states;
    for (int r = 0; r < 3; ++r) {
        CVector v = kInvSqrt3 * (p0 + root_of_unity(3, r) * p1 + root_of_unity(3, 2 * r) * p2);
        states.emplace_back(dims, std::move(v));
    }
    GeneralUeb out{StateSet(dims, std::move(states), "eq2a-ueb"), {}, false};
    out.verdict = verify_basis(out.set, BasisKind::Ueb, opts);
    out.gated = std::abs(std::abs(local_b.first.dot(local_b_primed.first)) - 1.0) < 1e-9;
    if (out.gated && out.verdict.outcome != Outcome::Verified) {
        throw GateError("two_qubit_ueb_general: expected a UEB, verifier returned " +
                        std::string(to_string(out.verdict.outcome)) + ": " + out.verdict.reason);
    }
    return out;
}

StateSet bell_meb(int d) {
    if (d < 2) throw std::invalid_argument("bell_meb: d must be >= 2");
    const QuditDims dims{d, d};
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<PureState> states;
    for (int t = 0; t < d; ++t) {
        for (int k = 0; k < d; ++k) {
            CVector v = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
            for (int j = 0; j < d; ++j) v[j * d + (j + t) % d] = amp * root_of_unity(d, j * k);
            states.emplace_back(dims, std::move(v));
        }
    }
    return gate(StateSet(dims, std::move(states), "bell-meb-" + std::to_string(d)), BasisKind::Umeb,
                Outcome::CompleteBasis);
}

namespace {

StateSet pad_second_party(const StateSet& set, int extra, std::string name) {
    const int da = set.dims()[0], db = set.dims()[1];
    const QuditDims dims{da, db + extra};
    std::vector<PureState> states;
    for (const auto& s : set.states()) {
        CVector v = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) v[i * (db + extra) + j] = s[static_cast<std::size_t>(i * db + j)];
        states.emplace_back(dims, std::move(v));
    }
    return StateSet(dims, std::move(states), std::move(name));
}

}  // namespace

StateSet embed_meb(int d, int n) {
    if (d < 2) throw std::invalid_argument("embed_meb: d must be >= 2");
    if (n < 1 || n >= d) throw std::invalid_argument("embed_meb: n must lie in [1, d)");
    StateSet set = pad_second_party(bell_meb(d), n, "embed-meb-" + std::to_string(d) + "-" + std::to_string(n));
    return gate(std::move(set), BasisKind::Umeb, Outcome::Verified);
}

StateSet meb_extension_completion(const CVector& x, const CVector& x_prime) {
    if (x.size() != 4 || x_prime.size() != 4) throw DimensionMismatch("meb_extension_completion: expected C^4 vectors");
    const double tol = 1e-9;
    if (std::abs(x.norm() - 1.0) > tol || std::abs(x_prime.norm() - 1.0) > tol || std::abs(x.dot(x_prime)) > tol) {
        throw std::invalid_argument("meb_extension_completion: pair is not orthonormal");
    }
    if (x.head(2).norm() > tol || x_prime.head(2).norm() > tol) {
        throw std::invalid_argument("meb_extension_completion: pair is not orthogonal to |0'>, |1'>");
    }
    const QuditDims dims{2, 4};
    const CVector zero = column({1.0, 0.0}), one = column({0.0, 1.0});
    std::vector<PureState> states;
    for (double sign : {1.0, -1.0}) states.emplace_back(dims, kInvSqrt2 * (kron(zero, x) + sign * kron(one, x_prime)));
    for (double sign : {1.0, -1.0}) states.emplace_back(dims, kInvSqrt2 * (kron(zero, x_prime) + sign * kron(one, x)));
    StateSet ext(dims, std::move(states), "meb-extension");

    std::vector<PureState> all = pad_second_party(bell_meb(2), 2, "").states();
    all.insert(all.end(), ext.states().begin(), ext.states().end());
    gate(StateSet(dims, std::move(all), "meb-extension+bell"), BasisKind::Umeb, Outcome::CompleteBasis);
    return ext;
}

StateSet bell_minus_first_in_2x3() {
    const StateSet embedded = embed_meb(2, 1);
    const std::vector<std::size_t> keep{1, 2, 3};
    return embedded.subset(keep, "prop2a-set");
}

StateSet three_qubit_w_ueb() {
    const double r = kInvSqrt3;
    const cplx w = root_of_unity(3, 1), w2 = root_of_unity(3, 2);
    std::vector<PureState> states{
        qubit_state({{"001", r}, {"010", r}, {"100", r}}),
        qubit_state({{"001", r}, {"010", r * w}, {"100", r * w2}}),
        qubit_state({{"001", r}, {"010", r * w2}, {"100", r * w}}),
        qubit_state({{"000", r}, {"101", r}, {"110", r}}),
        qubit_state({{"000", r}, {"101", r * w}, {"110", r * w2}}),
        qubit_state({{"000", r}, {"101", r * w2}, {"110", r * w}}),
    };
    return gate(StateSet(QuditDims::qubits(3), std::move(states), "eq5-w-ueb"), BasisKind::UebAllCuts,
                Outcome::Verified);
}

StateSet three_qubit_mixed_ueb() {
    const double r = kInvSqrt3;
    const cplx w = root_of_unity(3, 1), w2 = root_of_unity(3, 2);
    std::vector<PureState> states{
        qubit_state({{"000", 0.5}, {"011", 0.5}, {"101", 0.5}, {"110", 0.5}}),
        qubit_state({{"000", 0.5}, {"011", 0.5}, {"101", -0.5}, {"110", -0.5}}),
        qubit_state({{"000", 0.5}, {"011", -0.5}, {"101", 0.5}, {"110", -0.5}}),
        qubit_state({{"000", 0.5}, {"011", -0.5}, {"101", -0.5}, {"110", 0.5}}),
        qubit_state({{"001", r}, {"010", r}, {"100", r}}),
        qubit_state({{"001", r}, {"010", r * w}, {"100", r * w2}}),
        qubit_state({{"001", r}, {"010", r * w2}, {"100", r * w}}),
    };
    return gate(StateSet(QuditDims::qubits(3), std::move(states), "eq6-mixed-ueb"), BasisKind::UebAllCuts,
                Outcome::Verified);
}

namespace {

template <class Coeff>
StateSet superposition(const std::vector<std::string>& strings, Coeff coeff, std::string name) {
    check_strings(strings);
    const auto k = static_cast<int>(strings.size());
    std::vector<PureState> kets;
    for (const auto& s : strings) kets.push_back(PureState::ket(s));
    const QuditDims dims = kets.front().dims();
    const double amp = 1.0 / std::sqrt(static_cast<double>(k));
    std::vector<PureState> states;
    for (int r = 0; r < k; ++r) {
        CVector v = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
        for (int j = 0; j < k; ++j) v += amp * coeff(r, j) * kets[static_cast<std::size_t>(j)].amps();
        states.emplace_back(dims, std::move(v));
    }
    return StateSet(dims, std::move(states), std::move(name));
}

unsigned reverse_bits(unsigned v, int width) {
    unsigned out = 0;
    for (int i = 0; i < width; ++i) out |= ((v >> i) & 1u) << (width - 1 - i);
    return out;
}

}  // namespace

StateSet dft_superposition(const std::vector<std::string>& strings) {
    const auto k = static_cast<int>(strings.size());
    return superposition(strings, [k](int r, int j) { return root_of_unity(k, j * r); }, "dft-superposition");
}

StateSet hadamard_superposition(const std::vector<std::string>& strings) {
    const auto k = static_cast<unsigned>(strings.size());
    if (!std::has_single_bit(k)) throw std::invalid_argument("hadamard_superposition: count must be a power of two");
    const int width = std::countr_zero(k);
    return superposition(
        strings,
        [width](int r, int j) {
            const unsigned bits = static_cast<unsigned>(r) & reverse_bits(static_cast<unsigned>(j), width);
            return cplx(std::popcount(bits) % 2 ? -1.0 : 1.0, 0.0);
        },
        "hadamard-superposition");
}

StateSet n_qubit_ueb(int n, CoeffVariant variant) {
    if (n < 4) throw std::invalid_argument("n_qubit_ueb: N must be >= 4 (three qubits: three_qubit_mixed_ueb)");
    if (n > 10) throw std::invalid_argument("n_qubit_ueb: N above 10 is not supported");
    const QuditDims dims = QuditDims::qubits(n);
    const auto total = static_cast<unsigned>(dims.total());

    std::vector<std::string> weight_one, weight_rest;
    for (int i = 0; i < n; ++i) weight_one.push_back(bits_of(1u << i, n));
    for (const auto& s : weight_one) weight_rest.push_back(flipped(s));

    const bool hadamard = variant == CoeffVariant::HadamardIfPowerOfTwo &&
                          std::has_single_bit(static_cast<unsigned>(n));
    auto block = [&](const std::vector<std::string>& strings) {
        return hadamard ? hadamard_superposition(strings) : dft_superposition(strings);
    };

    std::vector<PureState> states;
    for (const auto& b : {block(weight_one), block(weight_rest)}) {
        states.insert(states.end(), b.states().begin(), b.states().end());
    }

    // Complementary pairs (x, ~x) with x < ~x, excluding weights 0, 1, N-1, N.
    std::vector<std::string> pair_heads;
    for (unsigned v = 0; v < total; ++v) {
        const int w = std::popcount(v);
        const unsigned c = (total - 1) ^ v;
        if (w >= 2 && w <= n - 2 && v < c) pair_heads.push_back(bits_of(v, n));
    }

    const std::string zeros(static_cast<std::size_t>(n), '0');
    auto vec = [](const std::string& bits) { return PureState::ket(bits).amps(); };
    const std::string& x0 = pair_heads.front();
    const CVector a = vec(x0), b = vec(flipped(x0)), z = vec(zeros);
    states.emplace_back(dims, kInvSqrt2 * (a + b));
    states.emplace_back(dims, 0.5 * a - 0.5 * b + kInvSqrt2 * z);
    states.emplace_back(dims, 0.5 * a - 0.5 * b - kInvSqrt2 * z);
    for (std::size_t i = 1; i < pair_heads.size(); ++i) {
        const CVector p = vec(pair_heads[i]), q = vec(flipped(pair_heads[i]));
        states.emplace_back(dims, kInvSqrt2 * (p + q));
        states.emplace_back(dims, kInvSqrt2 * (p - q));
    }

    StateSet set(dims, std::move(states), "nqubit-ueb-" + std::to_string(n));
    return gate(std::move(set), BasisKind::UebAllCuts, Outcome::Verified);
}

StateSet four_qubit_ueb_listing() {
    const double h = 0.5, r = kInvSqrt2;
    std::vector<PureState> states{
        qubit_state({{"0001", h}, {"0010", h}, {"0100", h}, {"1000", h}}),
        qubit_state({{"0001", h}, {"0010", h}, {"0100", -h}, {"1000", -h}}),
        qubit_state({{"0001", h}, {"0010", -h}, {"0100", h}, {"1000", -h}}),
        qubit_state({{"0001", h}, {"0010", -h}, {"0100", -h}, {"1000", h}}),
        qubit_state({{"1110", h}, {"1101", h}, {"1011", h}, {"0111", h}}),
        qubit_state({{"1110", h}, {"1101", h}, {"1011", -h}, {"0111", -h}}),
        qubit_state({{"1110", h}, {"1101", -h}, {"1011", h}, {"0111", -h}}),
        qubit_state({{"1110", h}, {"1101", -h}, {"1011", -h}, {"0111", h}}),
        qubit_state({{"0101", r}, {"1010", r}}),
        qubit_state({{"0101", r}, {"1010", -r}}),
        qubit_state({{"0110", r}, {"1001", r}}),
        qubit_state({{"0110", r}, {"1001", -r}}),
        qubit_state({{"0011", r}, {"1100", r}}),
        qubit_state({{"0011", r * r}, {"1100", -r * r}, {"0000", r}}),
        qubit_state({{"0011", r * r}, {"1100", -r * r}, {"0000", -r}}),
    };
    return gate(StateSet(QuditDims::qubits(4), std::move(states), "appendix-4qubit"), BasisKind::UebAllCuts,
                Outcome::Verified);
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"eq1-ueb", QuditDims{2, 2}, 3, BasisKind::Ueb, Outcome::Verified,
         "two-qubit UEB with real, unequally entangled amplitudes", two_qubit_ueb_real},
        {"eq2-ueb", QuditDims{2, 2}, 3, BasisKind::Ueb, Outcome::Verified,
         "two-qubit UEB of equally entangled states (cube roots of unity)", two_qubit_ueb_fourier},
        {"eq2a-ueb", QuditDims{2, 2}, 3, BasisKind::Ueb, Outcome::Verified,
         "general two-qubit UEB construction with computational local bases",
         [] {
             const auto c = QubitBasis::computational();
             return two_qubit_ueb_general(c, c, c).set;
         }},
        {"eq3-meb", QuditDims{2, 2}, 4, BasisKind::Umeb, Outcome::CompleteBasis,
         "two-qubit Bell basis (complete maximally entangled basis)", [] { return bell_meb(2); }},
        {"eq3-in-2x3", QuditDims{2, 3}, 4, BasisKind::Umeb, Outcome::Verified,
         "Bell basis embedded in 2x3: a UMEB", [] { return embed_meb(2, 1); }},
        {"eq4-meb-2x4", QuditDims{2, 4}, 8, BasisKind::Umeb, Outcome::CompleteBasis,
         "Bell basis plus its extension on |2'>, |3'>: complete MEB of 2x4",
         [] {
             CVector x = CVector::Zero(4), xp = CVector::Zero(4);
             x[2] = 1.0;
             xp[3] = 1.0;
             std::vector<PureState> all = pad_second_party(bell_meb(2), 2, "").states();
             const StateSet ext = meb_extension_completion(x, xp);
             all.insert(all.end(), ext.states().begin(), ext.states().end());
             return StateSet(QuditDims{2, 4}, std::move(all), "eq4-meb-2x4");
         }},
        {"prop2-3x5", QuditDims{3, 5}, 9, BasisKind::Umeb, Outcome::Verified,
         "complete MEB of 3x3 embedded in 3x5: a UMEB", [] { return embed_meb(3, 2); }},
        {"eq5-w-ueb", QuditDims::qubits(3), 6, BasisKind::UebAllCuts, Outcome::Verified,
         "three-qubit W-class UEB, unextendible across every bipartition", three_qubit_w_ueb},
        {"eq6-mixed-ueb", QuditDims::qubits(3), 7, BasisKind::UebAllCuts, Outcome::Verified,
         "three-qubit UEB mixing GHZ-class and W-class states", three_qubit_mixed_ueb},
        {"appendix-4qubit", QuditDims::qubits(4), 15, BasisKind::UebAllCuts, Outcome::Verified,
         "four-qubit UEB of W-type and GHZ-type states, complement |1111>", four_qubit_ueb_listing},
    };
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

}  // namespace ueb
