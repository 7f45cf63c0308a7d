/*
 *   Copyright 2026 The shufcong Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SHUFCONG_COMPAT_HPP
#define SHUFCONG_COMPAT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "shufcong/congruence.hpp"
#include "shufcong/errors.hpp"
#include "shufcong/poly.hpp"
#include "shufcong/presentation.hpp"
#include "shufcong/semiring.hpp"
#include "shufcong/trace.hpp"

namespace shufcong {

/// A relator u = v together with a pair of classes ([x], [y]) on which the
/// reduced coproducts of u and v have different coefficients.
struct CompatWitness {
    Relator relator;
    Word left;
    Word right;
    Value coeff_u;
    Value coeff_v;

    friend bool operator==(const CompatWitness&, const CompatWitness&) = default;
};

struct CompatReport {
    bool compatible = false;
    std::optional<CompatWitness> witness;
};

/// Decides whether the congruence of ctx is compatible with the unshuffle
/// coproduct over k, i.e. whether c(u) and c(v) agree in
/// K<A/=> (x) K<A/=> for every relator. Throws Inconclusive when the
/// engine cannot settle the question for some relator and no other relator
/// gives a witness.
CompatReport check_compatibility(const QuotientContext& ctx, const Semiring& k);

/// Coefficient of [x] (x) [y] in the reduced coproduct of w, computed by
/// enumerating the 2^|w| splittings of w into two subwords.
Value split_coefficient(const QuotientContext& ctx, const Semiring& k, const Word& w, const Word& x,
                        const Word& y);

/// Recomputes both coefficients of a witness independently of
/// check_compatibility. True when the relator belongs to ctx's presentation
/// and the two recomputed coefficients match the witness and differ.
bool verify_witness(const QuotientContext& ctx, const Semiring& k, const CompatWitness& w);

/// Primitivity test in the bialgebra K<A/=>: c(P) = P (x) 1 + 1 (x) P.
/// Compatibility is checked once at construction.
class PrimitivityOracle {
public:
    /// Throws PreconditionViolated when the congruence is not compatible over k.
    PrimitivityOracle(const QuotientContext& ctx, Semiring k);
    bool operator()(const Poly& p) const;

private:
    const QuotientContext* ctx_;
    Semiring k_;
};

bool is_primitive(const QuotientContext& ctx, const Semiring& k, const Poly& p);

class NonPrimeCharacteristic : public PreconditionViolated {
public:
    explicit NonPrimeCharacteristic(const Semiring& k)
        : PreconditionViolated("semiring " + k.to_string() + " does not have prime characteristic") {}
};

/// No pair of the remaining relators is primitive at some stage.
class NoProgress : public std::runtime_error {
public:
    explicit NoProgress(std::size_t stage)
        : std::runtime_error("no primitive relator at stage " + std::to_string(stage)), stage_(stage) {}
    std::size_t stage() const noexcept { return stage_; }

private:
    std::size_t stage_;
};

/// How the absorbed sets S_i are formed.
///
/// AsWritten: S_i holds the pairs of R outside R_1..R_{i-1} that R_i alone
/// identifies, and R_i is drawn from R minus S_1..S_{i-1}.
/// Cumulative: S_i holds the remaining pairs identified by R_1..R_i together,
/// and every stage draws from R minus all earlier R_j and S_j.
enum class PartitionConvention { AsWritten, Cumulative };

struct PrimitivePartition {
    /// The closed relator set R that is partitioned.
    std::vector<Relator> closure;
    std::vector<std::vector<Relator>> layers;
    std::vector<std::vector<Relator>> absorbed;
    /// Pairs of R in no layer and no absorbed set.
    std::vector<Relator> leftover;

    std::size_t depth() const noexcept { return layers.size(); }
};

PrimitivePartition primitive_partition(const Presentation& p, const Semiring& k,
                                       const ContextOptions& options = {},
                                       PartitionConvention convention = PartitionConvention::Cumulative);

/// Re-checks primitivity of every layer modulo the earlier ones, disjointness
/// of the layers, and that the layers generate the whole congruence.
bool verify_partition(const Presentation& p, const Semiring& k, const PrimitivePartition& partition,
                      const ContextOptions& options = {});

struct PartiallyCommutative {
    ThetaGraph theta;
    std::vector<std::vector<Letter>> identifications;
    std::vector<Letter> erasures;
};

struct PrimeDecomposition {
    std::uint64_t p;
    PrimitivePartition partition;
};

struct IncompatibleQuotient {
    CompatReport report;
};

using Classification = std::variant<PartiallyCommutative, PrimeDecomposition, IncompatibleQuotient>;

/// Which case of the compatibility classification the pair (presentation, k)
/// falls into. For rings of characteristic 0 or composite characteristic
/// and for non-ring semirings the compatible congruences are exactly the
/// partially commutative ones (for B also with erased letters).
Classification classify_quotient(const Presentation& p, const Semiring& k, const ContextOptions& options = {});

/// Classification over the booleans.
Classification boolean_classify(const Presentation& p, const ContextOptions& options = {});

/// All pairs of distinct traces u < v (length-lex on canonical words) of
/// length <= maxlen such that u - v is primitive in Z/p<M(A, theta)>.
std::vector<std::pair<Word, Word>> classify_primitive_binomials(std::uint64_t p, const Alphabet& alphabet,
                                                                const ThetaGraph& theta, std::size_t maxlen);

struct PliConsistent {
    /// d(a, b) for a < b, from relators a^(p^alpha) = b^(p^beta).
    std::map<std::pair<Letter, Letter>, std::int64_t> d;
    std::vector<std::int64_t> h;
    /// omega(a) = p^h(a)
    WeightFn omega;
};

/// Two relators (possibly the same one twice) that force a non-cancellable quotient.
struct NonCancellable {
    Relator first;
    Relator second;
};

using PliResult = std::variant<PliConsistent, NonCancellable>;

class ShapeError : public UsageError {
public:
    explicit ShapeError(const std::string& relator)
        : UsageError("relator " + relator + " is neither a^(p^i) = b^(p^j) nor a^(p^i) b^(p^j) = b^(p^j) a^(p^i)") {}
};

/// Consistency of a presentation made of relators a^(p^alpha) = b^(p^beta)
/// and a^(p^alpha) b^(p^beta) = b^(p^beta) a^(p^alpha).
PliResult pli_consistency(const Presentation& p, std::uint64_t prime);

struct CancellationFailure {
    Word x;
    Word u;
    Word v;
    /// true: x u = x v; false: u x = v x
    bool left;
};

/// Searches words u != v and x of length <= bound with xu = xv or ux = vx.
/// Throws Inconclusive when nothing is found but some comparison could not
/// be settled.
std::optional<CancellationFailure> cancellability_search(const QuotientContext& ctx, std::size_t bound);

} // namespace shufcong

#endif
