#pragma once

#include <vector>

#include "kpg/census.hpp"
#include "kpg/invariant.hpp"
#include "kpg/series.hpp"

namespace kpg {

/// Largest vertex count for which the automorphism-weighted generating
/// functions are assembled. Order 8 means one pass over the 2^28 edge
/// subsets of K_8.
inline constexpr int kMaxEnsembleOrder = 8;
/// Cap of the iso-class cross-check path.
inline constexpr int kMaxIsoClassOrder = 5;

/// Weight-k part of sum over all graphs of W_G/|Aut G|, computed as a single
/// labelled sum over edge subsets E' of K_k:
///   (1/k!) sum_{E'} 2^{C(k,2)-|E'|} (-1)^{|E'|-k+c(E')} prod q_{component sizes}.
/// 1 <= k <= 8, k <= order.
TruncSeries ensemble_w(int k, int order = kDefaultOrder, const CensusOptions& options = {});

/// Weight-k part of sum over all graphs of A_G/|Aut G|, as a labelled sum over
/// spanning forests F of K_k: (1/k!) sum_F 2^{C(k,2)-|F|} prod_T |T| q_{|T|}.
TruncSeries ensemble_a(int k, int order = kDefaultOrder);

TruncSeries ensemble(Invariant which, int k, int order = kDefaultOrder,
                     const CensusOptions& options = {});

/// 1 + sum_{k=1..order} ensemble(which, k): the generating function over all
/// graphs (the empty graph contributes the constant 1). order <= 8.
TruncSeries full_series(Invariant which, int order = kDefaultOrder,
                        const CensusOptions& options = {});

/// log of a series with constant term 1; applied to full_series it yields the
/// generating function over connected graphs.
TruncSeries connected_part(const TruncSeries& full);

/// Direct definition: canonical graphs on k vertices, each weighted by
/// I_G/|Aut G|. Independent of the labelled-sum formulas. k <= 5.
TruncSeries iso_class_series(Invariant which, int k, int order = kDefaultOrder);

/// Rescaling constants i_1..i_N with i_n = n!·[q_n] ensemble(which, n).
struct ConstantsTable {
  Invariant source = Invariant::W;
  /// values[n-1] = i_n.
  std::vector<Rational> values;

  const Rational& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

ConstantsTable rescale_constants(Invariant which, int max_n,
                                 const CensusOptions& options = {});

/// Reads i_1..i_max_n off an already assembled full_series (its weight-n part
/// is ensemble(which, n)).
ConstantsTable constants_from_series(Invariant which, const TruncSeries& full, int max_n);

/// lambda_n = 2^{n(n-1)/2} (n-1)! / i_n for every n in the table. Throws
/// DegeneratePlanError if some i_n is zero.
RescalePlan make_plan(const ConstantsTable& table);

/// The connected generating function after the plan's substitution, in p-variables.
TruncSeries rescaled_connected_series(Invariant which, int order = kDefaultOrder,
                                      const CensusOptions& options = {});

}  // namespace kpg
