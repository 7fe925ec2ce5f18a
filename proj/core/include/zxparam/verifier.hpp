// Copyright 2026 The zxparam Authors
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

#ifndef ZXPARAM_VERIFIER_HPP
#define ZXPARAM_VERIFIER_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxparam/circuit.hpp"
#include "zxparam/diagram.hpp"
#include "zxparam/reduction.hpp"

namespace zxparam {

using cplx = std::complex<double>;
/// Parameter values in radians keyed by ParamId.
using Assignment = std::map<ParamId, double>;

// ---------------------------------------------------------------------------
// Tensor evaluation

class TooLarge : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class MissingAssignment : public std::runtime_error {
   public:
    explicit MissingAssignment(ParamId p)
        : std::runtime_error("no value assigned to parameter " + std::to_string(p)), param(p) {}
    ParamId param;
};

class ShapeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Dense tensor of a diagram. Wire i is bit i of the amplitude index; wires are
/// the boundaries sorted inputs first, then outputs, each by position. For a
/// circuit diagram on n qubits amplitudes[in + (out << n)] is U[out][in].
struct TensorState {
    std::vector<cplx> amplitudes;
    std::vector<VertexId> wire_order;
};

inline constexpr int kMaxTensorWires = 12;

TensorState tensor_eval(const Diagram& d, const Assignment& assignment);
/// Same contraction on a raw network of Z/X spiders and arity-2 H-boxes.
TensorState tensor_eval(const SpiderNetwork& net, const Assignment& assignment);

// ---------------------------------------------------------------------------
// Proportionality

struct ProportionalityReport {
    bool holds = false;
    /// lambda with t1 = lambda * t2, one per sample.
    std::vector<cplx> ratios;
    double max_deviation = 0.0;
    /// Parameter vectors of the samples (check_reduction only), in radians.
    std::vector<std::vector<double>> samples;
    /// First sample that failed, if any.
    std::optional<std::size_t> first_failure;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Tests t1 = lambda * t2 with lambda != 0; deviation is relative to max|t1|.
ProportionalityReport check_proportional(const TensorState& t1, const TensorState& t2,
                                         double tol = kDefaultTolerance);
ProportionalityReport check_proportional(const std::vector<cplx>& t1, const std::vector<cplx>& t2,
                                         double tol = kDefaultTolerance);

/// Dense unitary of `c` at `alpha` (radians, indexed by ParamId), row-major
/// U[out * 2^n + in], qubit q is bit q.
std::vector<cplx> circuit_unitary(const Circuit& c, const std::vector<double>& alpha);

/// Sample set used by check_reduction: zeros, each parameter at pi alone, then
/// `n_random` uniform vectors in [0, 2pi)^k.
std::vector<std::vector<double>> reduction_samples(std::size_t k, std::size_t n_random, std::uint64_t seed);

class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Checks c1(alpha) = lambda(alpha) * c2(P alpha + c) over the all-zeros vector,
/// each parameter at pi with the others at 0, and `n_random` uniform vectors in
/// [0, 2pi)^k drawn from `seed`. Rows of `map` are matched to c2 parameters by
/// name, columns to c1 parameters by name.
ProportionalityReport check_reduction(const Circuit& c1, const Circuit& c2, const ReductionMap& map,
                                      std::size_t n_random = 5, double tol = kDefaultTolerance,
                                      std::uint64_t seed = 0);

/// Parameters whose 0 and pi evaluations (others at 0) are proportional.
std::vector<ParamId> trivial_params(const Circuit& c, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// AP form

class ZeroState : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotClifford : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// sum over {x : A x = b} of e^{i pi/2 phi(x)} |x>, with
/// phi(x) = sum_i linear_phase[i] x_i + 2 * sum_{(i,j)} x_i x_j.
struct APForm {
    std::size_t n = 0;
    /// Reduced row echelon form, one row per constraint, each of length n.
    std::vector<std::vector<std::uint8_t>> a_matrix;
    std::vector<std::uint8_t> b_vector;
    std::vector<int> linear_phase;
    std::set<std::pair<int, int>> quadratic_pairs;

    friend bool operator==(const APForm&, const APForm&) = default;
};

/// AP form of a Clifford state diagram (outputs only, no parameters). Output
/// wire i is variable x_i.
APForm ap_form(const Diagram& d);

/// Dense state of an AP form, bit i = x_i.
std::vector<cplx> ap_state(const APForm& ap);

// ---------------------------------------------------------------------------
// Certificates

class NotTerminalForm : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class LegDecoration : std::uint8_t { I, H };

/// A parameter leg seen as an output of the stabiliser state: gadget phases
/// attach to their axis through H, other parametrised spiders directly.
struct ParameterLeg {
    VertexId phase_spider = 0;
    VertexId vertex = 0;
    LegDecoration decoration = LegDecoration::I;
    /// Neighbours of `vertex` other than the leg itself; boundary nodes included.
    std::set<VertexId> neighbourhood;
};

std::vector<ParameterLeg> parameter_legs(const Diagram& d);

enum class ZZCondition : std::uint8_t { AdjacentIsolated, IdenticalNeighbourhood };

struct ZZPair {
    /// Phase spiders of the two legs, first < second.
    VertexId first = 0;
    VertexId second = 0;
    ZZCondition condition = ZZCondition::AdjacentIsolated;

    friend bool operator==(const ZZPair&, const ZZPair&) = default;
};

/// Every pair of parameter legs with a weight-2 ZZ stabiliser. Empty means no
/// further fusion is possible.
std::vector<ZZPair> zz_certificate(const Diagram& d);

struct CertificateReport {
    bool passes = false;
    std::size_t num_params = 0;
    /// One line per failed condition, prefixed "(a)" .. "(d)".
    std::vector<std::string> reasons;
    std::vector<ZZPair> zz_pairs;
};

CertificateReport optimality_certificate(const Diagram& d);

// ---------------------------------------------------------------------------
// Brute-force oracle

class TooManyParams : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kOracleMaxParams = 5;

struct OracleResult {
    std::size_t count = 0;
    ReductionMap witness;
    /// c with the non-representative gates removed and representatives renamed.
    Circuit reduced;
    std::size_t candidates_tested = 0;
};

/// Smallest l such that some in-place parsimonious map with l rows reduces `c`.
/// Enumerates set partitions by increasing l, every representative choice and
/// every sign on the non-representatives.
OracleResult brute_force_min(const Circuit& c, double tol = kDefaultTolerance,
                             std::size_t max_params = kOracleMaxParams, std::size_t n_random = 5,
                             std::uint64_t seed = 0);

/// c with the RzParam gates not listed in `keep` removed; kept parameters are
/// renumbered in order and named `names`.
Circuit restrict_params(const Circuit& c, const std::vector<ParamId>& keep,
                        const std::vector<std::string>& names);

}  // namespace zxparam

#endif  // ZXPARAM_VERIFIER_HPP
