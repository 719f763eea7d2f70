#pragma once

// Cone dualization by incremental Fourier-Motzkin elimination.
//
// Given generators x_1..x_n of a cone C, the engine maintains the extreme
// rays sigma_1..sigma_t of the dual of the cone generated by the processed
// generators. The first step inverts a basis; each further generator x
// splits the current forms by the sign of sigma(x), and every adjacent
// positive/negative pair (p, n) contributes the combination
//   sigma_p(x) * sigma_n - sigma_n(x) * sigma_p
// which vanishes on x. Each form carries the set of processed generators on
// which it vanishes.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "algpoly/linalg.hpp"
#include "algpoly/scalar.hpp"

namespace algpoly {

using IndexSet = boost::dynamic_bitset<std::uint64_t>;

enum class InsertionOrder {
  Input,   // generators in the order given
  Sorted,  // generators with more zero coordinates first, ties in input order
};

struct DualizeOptions {
  unsigned workers = 1;
  InsertionOrder order = InsertionOrder::Input;
};

/// Normalizes a nonzero vector by a positive factor (see ScalarTraits).
template <class T>
std::vector<T> normalize(std::vector<T> v) {
  ScalarTraits<T>::normalize(v);
  return v;
}

template <class T>
struct SupportForm {
  std::vector<T> form;  // restricted coordinates
  IndexSet incidence;   // processed generators on which the form vanishes
};

template <class T>
class Dualizer {
  using Tr = ScalarTraits<T>;

 public:
  /// `generators` must span a space of dimension `dim` (after restriction).
  Dualizer(std::vector<std::vector<T>> generators, unsigned workers = 1)
      : gens_(std::move(generators)),
        dim_(gens_.empty() ? 0 : gens_[0].size()),
        processed_(gens_.size()),
        workers_(std::max(1u, workers)) {}

  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<T>>& generators() const { return gens_; }
  const std::vector<SupportForm<T>>& forms() const { return forms_; }
  const IndexSet& processed() const { return processed_; }

  /// Dual of the simplicial cone over a basis: the columns of the inverse of
  /// the basis matrix, each normalized.
  void start(const std::vector<std::size_t>& basis) {
    if (basis.size() != dim_) fail(ErrorKind::RankDeficient, "initial basis must have exactly dim elements");
    std::vector<std::vector<T>> rows;
    for (auto i : basis) rows.push_back(gens_[i]);
    auto [inv, scale] = scaled_inverse(Matrix<T>::from_rows(rows));
    const bool flip = Tr::sign(scale) < 0;
    forms_.clear();
    for (std::size_t j = 0; j < dim_; ++j) {
      SupportForm<T> f;
      for (std::size_t i = 0; i < dim_; ++i) f.form.push_back(flip ? -inv(i, j) : inv(i, j));
      Tr::normalize(f.form);
      f.incidence = IndexSet(gens_.size());
      for (std::size_t k = 0; k < dim_; ++k)
        if (k != j) f.incidence.set(basis[k]);
      forms_.push_back(std::move(f));
    }
    for (auto i : basis) processed_.set(i);
  }

  struct StepReport {
    bool outside = false;                  // some form was negative on the generator
    std::vector<IndexSet> visible_facets;  // incidences of the negative forms before the step
    std::size_t new_forms = 0;
  };

  /// One Fourier-Motzkin step with generator g.
  StepReport add(std::size_t g) {
    StepReport report;
    const auto x = std::span<const T>(gens_[g]);
    std::vector<T> values;
    values.reserve(forms_.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      values.push_back(dot(std::span<const T>(forms_[i].form), x));
      const int s = Tr::sign(values.back());
      (s > 0 ? pos : (s < 0 ? neg : zero)).push_back(i);
    }
    processed_.set(g);
    if (neg.empty()) {
      for (auto i : zero) forms_[i].incidence.set(g);
      return report;
    }
    report.outside = true;
    for (auto i : neg) report.visible_facets.push_back(forms_[i].incidence);

    std::vector<SupportForm<T>> created = combine_pairs(pos, neg, values, g);

    std::vector<SupportForm<T>> next;
    next.reserve(pos.size() + zero.size() + created.size());
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      const int s = Tr::sign(values[i]);
      if (s < 0) continue;
      if (s == 0) forms_[i].incidence.set(g);
      next.push_back(std::move(forms_[i]));
    }
    report.new_forms = created.size();
    for (auto& f : created) next.push_back(std::move(f));
    forms_ = std::move(next);
    return report;
  }

  /// Whether the combination of forms p and n (whose common incidence is
  /// `common`) is an extreme ray of the next dual cone. If p or n is
  /// simplicial, its incidence is an independent set, so the common part spans
  /// a ridge exactly when it has dim-2 elements. Otherwise the subset test (no
  /// other current form may vanish on all of `common`) runs first, then the
  /// rank test (the generators in `common` must have rank dim-2).
  bool is_extreme(const IndexSet& common, std::size_t p, std::size_t n) const {
    const std::size_t c = common.count();
    if (is_simplicial(p) || is_simplicial(n)) return c + 2 == dim_;
    for (std::size_t t = 0; t < forms_.size(); ++t) {
      if (t == p || t == n) continue;
      if (common.is_subset_of(forms_[t].incidence)) return false;
    }
    detail::EchelonBasis<T> basis(dim_);
    for (auto i = common.find_first(); i != IndexSet::npos; i = common.find_next(i)) {
      basis.add(gens_[i]);
      if (basis.rank() + 2 == dim_) return true;
    }
    return basis.rank() + 2 == dim_;
  }

  bool is_simplicial(std::size_t f) const { return forms_[f].incidence.count() + 1 == dim_; }

 private:
  struct SetHash {
    std::size_t operator()(const IndexSet& s) const {
      std::size_t h = s.size();
      std::vector<IndexSet::block_type> blocks(s.num_blocks());
      boost::to_block_range(s, blocks.begin());
      for (auto b : blocks) h = h * 1099511628211ULL ^ std::hash<IndexSet::block_type>{}(b);
      return h;
    }
  };

  /// New forms from adjacent positive/negative pairs. Simplicial pairs are
  /// matched through their shared ridge; all other pairs are tested one by
  /// one. The result order depends only on the state, not on `workers_`.
  std::vector<SupportForm<T>> combine_pairs(const std::vector<std::size_t>& pos, const std::vector<std::size_t>& neg,
                                            const std::vector<T>& values, std::size_t g) const {
    const std::size_t min_common = dim_ >= 2 ? dim_ - 2 : 0;
    std::unordered_map<IndexSet, std::vector<std::size_t>, SetHash> ridges;
    std::vector<std::size_t> pos_other;
    for (std::size_t p : pos) {
      if (!is_simplicial(p)) {
        pos_other.push_back(p);
        continue;
      }
      const IndexSet& inc = forms_[p].incidence;
      for (auto i = inc.find_first(); i != IndexSet::npos; i = inc.find_next(i)) {
        IndexSet r = inc;
        r.reset(i);
        ridges[r].push_back(p);
      }
    }

    auto combine = [&](std::size_t p, std::size_t n, IndexSet common, std::vector<SupportForm<T>>& out) {
      SupportForm<T> f;
      f.form.reserve(dim_);
      const T& vp = values[p];
      const T& vn = values[n];
      for (std::size_t k = 0; k < dim_; ++k) f.form.push_back(vp * forms_[n].form[k] - vn * forms_[p].form[k]);
      Tr::normalize(f.form);
      common.set(g);
      f.incidence = std::move(common);
      out.push_back(std::move(f));
    };
    auto work = [&](std::size_t begin, std::size_t end, std::vector<SupportForm<T>>& out) {
      for (std::size_t b = begin; b < end; ++b) {
        const std::size_t n = neg[b];
        const IndexSet& inc = forms_[n].incidence;
        if (is_simplicial(n)) {
          std::vector<std::size_t> partners;
          for (auto i = inc.find_first(); i != IndexSet::npos; i = inc.find_next(i)) {
            IndexSet r = inc;
            r.reset(i);
            if (auto it = ridges.find(r); it != ridges.end())
              partners.insert(partners.end(), it->second.begin(), it->second.end());
          }
          std::sort(partners.begin(), partners.end());
          for (std::size_t p : partners) combine(p, n, forms_[p].incidence & inc, out);
          for (std::size_t p : pos_other) {
            IndexSet common = forms_[p].incidence & inc;
            if (common.count() + 2 == dim_) combine(p, n, std::move(common), out);
          }
          continue;
        }
        for (std::size_t p : pos) {
          IndexSet common = forms_[p].incidence & inc;
          if (common.count() < min_common) continue;
          if (!is_extreme(common, p, n)) continue;
          combine(p, n, std::move(common), out);
        }
      }
    };
    const std::size_t nworkers = std::min<std::size_t>(workers_, neg.size());
    if (nworkers <= 1) {
      std::vector<SupportForm<T>> out;
      work(0, neg.size(), out);
      return out;
    }
    std::vector<std::vector<SupportForm<T>>> parts(nworkers);
    std::vector<std::exception_ptr> errors(nworkers);
    {
      std::vector<std::jthread> threads;
      const std::size_t chunk = (neg.size() + nworkers - 1) / nworkers;
      for (std::size_t w = 0; w < nworkers; ++w) {
        const std::size_t begin = std::min(neg.size(), w * chunk), end = std::min(neg.size(), begin + chunk);
        threads.emplace_back([&, w, begin, end] {
          try {
            work(begin, end, parts[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    std::vector<SupportForm<T>> out;
    for (auto& part : parts)
      for (auto& f : part) out.push_back(std::move(f));
    return out;
  }

  std::vector<std::vector<T>> gens_;
  std::size_t dim_;
  std::vector<SupportForm<T>> forms_;
  IndexSet processed_;
  unsigned workers_;
};

template <class T>
struct DualizationResult {
  SpanRestriction<T> span;
  std::size_t rank = 0;                        // dimension of the cone
  std::vector<std::vector<T>> support_forms;   // ambient coordinates, normalized
  std::vector<IndexSet> form_incidence;        // per form: input generators it vanishes on
  std::vector<std::size_t> extreme;            // input generators that are extreme rays
  bool pointed = true;                         // the cone contains no line
  std::vector<std::size_t> insertion_order;
};

template <class T>
std::vector<std::size_t> insertion_order(const std::vector<std::vector<T>>& generators, InsertionOrder order) {
  std::vector<std::size_t> idx(generators.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (order == InsertionOrder::Sorted) {
    auto zeros = [&](std::size_t i) {
      return std::count_if(generators[i].begin(), generators[i].end(),
                           [](const T& v) { return ScalarTraits<T>::is_zero(v); });
    };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return zeros(a) > zeros(b); });
  }
  return idx;
}

/// Support forms and extreme rays of the cone generated by `generators`.
/// The same engine performs vertex enumeration when fed constraint rows:
/// then the support forms are the extreme rays of the constraint cone.
template <class T>
DualizationResult<T> dualize(const std::vector<std::vector<T>>& generators, const DualizeOptions& options = {}) {
  using Tr = ScalarTraits<T>;
  if (generators.empty()) fail(ErrorKind::InvalidArgument, "dualize needs at least one generator");
  const std::size_t d = generators[0].size();
  for (const auto& g : generators)
    if (g.size() != d) fail(ErrorKind::DimensionMismatch, "generators of different lengths");

  DualizationResult<T> result;
  auto [span, projected] = restrict_to_span(generators);
  result.span = span;
  result.rank = span.rank();
  result.insertion_order = insertion_order(generators, options.order);
  const std::size_t r = result.rank;
  if (r == 0) return result;

  std::vector<std::vector<T>> ordered;
  for (auto i : result.insertion_order) ordered.push_back(projected[i]);
  auto basis_pos = independent_subset(ordered);
  std::vector<std::size_t> basis;
  for (auto p : basis_pos) basis.push_back(result.insertion_order[p]);

  Dualizer<T> engine(projected, options.workers);
  engine.start(basis);
  IndexSet in_basis(generators.size());
  for (auto b : basis) in_basis.set(b);
  for (auto g : result.insertion_order)
    if (!in_basis.test(g)) engine.add(g);

  const T& like = generators[0][0];
  std::vector<std::vector<T>> restricted_forms;
  for (const auto& f : engine.forms()) {
    restricted_forms.push_back(f.form);
    result.support_forms.push_back(normalize(span.lift_form(f.form, like)));
    result.form_incidence.push_back(f.incidence);
  }
  result.pointed = rank(restricted_forms) == r;
  if (!result.pointed) return result;

  // extreme rays: nonzero generators whose vanishing forms have rank r-1;
  // positive multiples share their incidence, keep the first
  std::vector<IndexSet> seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (std::all_of(projected[i].begin(), projected[i].end(), [](const T& v) { return Tr::is_zero(v); })) continue;
    IndexSet on(engine.forms().size());
    std::vector<std::vector<T>> vanishing;
    for (std::size_t f = 0; f < engine.forms().size(); ++f)
      if (result.form_incidence[f].test(i)) {
        on.set(f);
        vanishing.push_back(restricted_forms[f]);
      }
    if (vanishing.size() + 1 < r) continue;
    if (algpoly::rank(vanishing) + 1 != r) continue;
    if (std::find(seen.begin(), seen.end(), on) != seen.end()) continue;
    seen.push_back(on);
    result.extreme.push_back(i);
  }
  return result;
}

}  // namespace algpoly
