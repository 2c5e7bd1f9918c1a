// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fptsub/streaming.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "fptsub/rounding.hpp"

namespace fptsub {
namespace {

int ceil_positive(double x) {
  // Guards ⌈k·ε·n⌉-style products against representation error.
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(x));
}

struct TopEntry {
  double value;
  int arrival;
  Element element;
};

class StreamRun {
 public:
  StreamRun(const SetFunction& f, const Matroid& m, const StreamPlan& plan,
            std::span<const Element> permutation, const StreamingOptions& options)
      : f_(f, out_.ledger),
        m_(m, out_.ledger),
        plan_(plan),
        perm_(permutation),
        options_(options),
        top_capacity_(static_cast<std::size_t>(top_singleton_count(plan.epsilon))) {}

  StreamingOutcome run() {
    for (int j = 0; j < plan_.n; ++j) {
      arriving_ = perm_[static_cast<std::size_t>(j)];
      const double single = query_value(Subset{arriving_});
      if (j < plan_.warmup) {
        best_warmup_ = std::max(best_warmup_, single);
      } else if (j < plan_.tail_begin()) {
        if (j == plan_.warmup) finish_warmup();
        select_step(j, single);
      } else if (!out_.break_triggered) {
        if (j == plan_.tail_begin()) begin_tail();
        filter(arriving_);
      }
      offer_top(single, j);
      arriving_ = -1;
      track_buffer();
    }
    finish();
    return std::move(out_);
  }

 private:
  void finish_warmup() {
    out_.w = best_warmup_ * plan_.r / plan_.epsilon;
    empty_value_ = query_value(Subset{});
  }

  // Phase 2 for the element at stream position j with singleton value `single`.
  void select_step(int j, double single) {
    const int step = (j - plan_.warmup) / plan_.window + 1;
    const bool opens_window = (j - plan_.warmup) % plan_.window == 0;
    if (opens_window) {
      pending_.reset();
      pending_score_ = 0.0;
      if (step >= 2) {
        // s_1 ∈ S_{i-1}: feasible iff S_{i-1} is, with marginal exactly 0.
        if (query_independent(greedy_)) {
          pending_ = chain_[0].selected;
          pending_score_ = 0.0;
        }
      }
    }
    if (step == 1) {
      if (!pending_ || single > pending_score_) {
        pending_ = arriving_;
        pending_score_ = single;
      }
    } else {
      const Subset joint = with_element(greedy_, arriving_);
      if (query_independent(joint)) {
        const double gain = query_value(joint) - greedy_value_;
        if (!pending_ || gain > pending_score_) {
          pending_ = arriving_;
          pending_score_ = gain;
        }
      }
    }
    const bool closes_window = (j - plan_.warmup + 1) % plan_.window == 0;
    if (closes_window) close_window(step);
  }

  void close_window(int step) {
    ChainStep s;
    s.step = step;
    prefixes_.push_back(greedy_);
    if (step == 1) {
      s.selected = *pending_;
      s.marginal = pending_score_ - empty_value_;
      prefix_values_.push_back(empty_value_);
      greedy_ = Subset{s.selected};
      out_.loop_selector = !query_independent(greedy_);
    } else {
      prefix_values_.push_back(greedy_value_);
      if (pending_) {
        s.selected = *pending_;
        s.marginal = pending_score_;
      } else {
        s.selected = chain_[0].selected;
        s.marginal = 0.0;
      }
      greedy_ = with_element(greedy_, s.selected);
    }
    chain_.push_back(s);
    greedy_value_ = query_value(greedy_);
    pending_.reset();
  }

  void begin_tail() {
    out_.grid_size = streaming_grid_size(plan_.epsilon, plan_.r);
    out_.filter_cap = streaming_filter_cap(plan_.epsilon, plan_.r);
    if (out_.w > 0.0) {
      grid_.emplace(make_streaming_grid(plan_.epsilon, out_.w, plan_.r));
      for (const ChainStep& s : chain_) thresholds_.push_back(grid_->floor(s.marginal));
    }
  }

  void filter(Element e) {
    for (int i = 0; i < plan_.r; ++i) {
      const Subset& prefix = prefixes_[static_cast<std::size_t>(i)];
      const Subset joint = with_element(prefix, e);
      if (!query_independent(joint)) continue;
      const double gain = query_value(joint) - prefix_values_[static_cast<std::size_t>(i)];
      const bool admitted =
          grid_ ? grid_->floor(gain) > thresholds_[static_cast<std::size_t>(i)] : gain > 0.0;
      if (admitted) {
        filtered_.push_back(e);
        break;
      }
    }
    out_.peak_filtered = std::max(out_.peak_filtered, filtered_.size());
    if (static_cast<double>(filtered_.size()) > out_.filter_cap) out_.break_triggered = true;
  }

  void offer_top(double single, int arrival) {
    if (top_capacity_ == 0) return;
    if (top_.size() == top_capacity_) {
      if (!(single > top_.back().value)) return;
      top_.pop_back();
    }
    const TopEntry entry{single, arrival, arriving_};
    const auto pos = std::find_if(top_.begin(), top_.end(), [&](const TopEntry& t) {
      return single > t.value;
    });
    top_.insert(pos, entry);
  }

  Subset buffer() const {
    std::vector<Element> ids(greedy_.begin(), greedy_.end());
    for (const TopEntry& t : top_) ids.push_back(t.element);
    ids.insert(ids.end(), filtered_.begin(), filtered_.end());
    if (pending_) ids.push_back(*pending_);
    return make_subset(std::move(ids));
  }

  void track_buffer() {
    out_.peak_buffer_elements = std::max(out_.peak_buffer_elements, buffer().size());
  }

  void guard(std::span<const Element> subset) const {
    if (!options_.enforce_buffer_discipline) return;
    const Subset held = buffer();
    for (Element e : subset) {
      if (e != arriving_ && !contains(held, e)) {
        throw std::logic_error("streaming query touched unbuffered element " + std::to_string(e));
      }
    }
  }

  double query_value(const Subset& subset) {
    guard(subset);
    return f_.value(subset);
  }

  bool query_independent(const Subset& subset) {
    guard(subset);
    return m_.independent(subset);
  }

  void finish() {
    out_.chain = chain_;
    out_.greedy = greedy_;
    out_.filtered = make_subset(filtered_);
    std::vector<Element> t_ids;
    for (const TopEntry& t : top_) t_ids.push_back(t.element);
    out_.top_singletons = make_subset(std::move(t_ids));
    const Subset pool = set_union(set_union(out_.top_singletons, out_.greedy), out_.filtered);
    const OptResult best = best_feasible_subset(f_, m_, pool, options_.search_budget);
    out_.solution = best.set;
    out_.value = best.value;
    out_.search_visited = best.visited;
  }

  StreamingOutcome out_;
  ValueOracle f_;
  MembershipOracle m_;
  StreamPlan plan_;
  std::span<const Element> perm_;
  StreamingOptions options_;
  std::size_t top_capacity_;

  Element arriving_ = -1;
  double best_warmup_ = 0.0;
  double empty_value_ = 0.0;
  std::vector<TopEntry> top_;  // value desc, then arrival asc

  std::optional<Element> pending_;
  double pending_score_ = 0.0;
  std::vector<ChainStep> chain_;
  Subset greedy_;
  double greedy_value_ = 0.0;
  std::vector<Subset> prefixes_;        // S_{i-1} per step
  std::vector<double> prefix_values_;   // f(S_{i-1}) per step

  std::optional<RoundingGrid> grid_;
  std::vector<double> thresholds_;
  std::vector<Element> filtered_;
};

}  // namespace

StreamPlan StreamPlan::make(int n, int r, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("streaming: epsilon must lie in (0, 1/2)");
  }
  if (r < 1) throw std::invalid_argument("streaming: rank must be >= 1");
  if (n < 1) throw std::invalid_argument("streaming: empty stream");
  StreamPlan plan;
  plan.n = n;
  plan.r = r;
  plan.epsilon = epsilon;
  plan.warmup = ceil_positive(epsilon * n);
  plan.window = ceil_positive(epsilon * n / r);
  if (plan.tail_begin() >= n) {
    throw std::invalid_argument("streaming: n = " + std::to_string(n) +
                                " leaves no filtering tail after the warm-up and " +
                                std::to_string(r) + " selection windows");
  }
  return plan;
}

int top_singleton_count(double epsilon) {
  return ceil_positive(std::log(1.0 / epsilon) / epsilon);
}

double streaming_filter_cap(double epsilon, int r) {
  return r * std::log(r / epsilon) * streaming_grid_size(epsilon, r) / epsilon;
}

StreamingOutcome run_greedy_filtering(const SetFunction& f, const Matroid& m, int r,
                                      std::span<const Element> permutation, double epsilon,
                                      const StreamingOptions& options) {
  const int n = static_cast<int>(permutation.size());
  const StreamPlan plan = StreamPlan::make(n, r, epsilon);
  if (f.ground().size() != n || f.ground().universe() != n || m.ground().size() != n ||
      m.ground().universe() != n) {
    throw std::invalid_argument("streaming: function and matroid must share the ground set 0..n-1");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Element e : permutation) {
    if (e < 0 || e >= n || seen[static_cast<std::size_t>(e)]) {
      throw std::invalid_argument("streaming: arrival order is not a permutation of 0..n-1");
    }
    seen[static_cast<std::size_t>(e)] = 1;
  }
  return StreamRun(f, m, plan, permutation, options).run();
}

}  // namespace fptsub
