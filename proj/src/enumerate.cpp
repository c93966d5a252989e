#include "conesphere/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conesphere {

namespace {

// ---------------------------------------------------------------------------
// pattern scaffold: a fixed distribution of segments over cylinder boundaries

struct Pattern {
  int t = 0;
  int m = 0;
  std::vector<int> size_of;   // m_c per cylinder
  std::vector<int> cyl_of;    // segment -> cylinder
  std::vector<int> next_of;   // cyclic successor on the boundary
  std::vector<int> prev_of;

  static Pattern make(const std::vector<int>& sizes) {
    Pattern p;
    p.t = static_cast<int>(sizes.size());
    p.size_of = sizes;
    for (int c = 0; c < p.t; ++c) {
      int first = p.m;
      for (int i = 0; i < sizes[c]; ++i) {
        p.cyl_of.push_back(c);
        p.next_of.push_back(first + (i + 1) % sizes[c]);
        p.prev_of.push_back(first + (i + sizes[c] - 1) % sizes[c]);
        ++p.m;
      }
    }
    return p;
  }
};

enum class SquareMode { Any, Require, Forbid };

// target vertex classes: exact multiset of corner counts; empty map = free
using ClassCounts = std::map<int, int>;

struct Candidate {
  std::vector<int> partner;       // per segment
  std::vector<long long> seg_len; // scaled integer length per segment
};

// ---------------------------------------------------------------------------
// canonical form: minimal encoding over start segment, traversal direction,
// first-touch cylinder order and induced segment relabeling

struct Canonical {
  std::vector<long long> key;
  JenkinsStrebelSurface surface;
};

Canonical canonicalize(const Pattern& pat, const std::vector<int>& partner,
                       const std::vector<long long>& seg_len,
                       const std::vector<long long>& scaled_c, long long denom) {
  // reduce the grid so keys agree across denominators
  long long g = denom;
  for (long long v : seg_len) g = std::gcd(g, v);
  std::vector<long long> len(seg_len);
  std::vector<long long> circ(scaled_c);
  for (auto& v : len) v /= g;
  for (auto& v : circ) v /= g;
  const long long d = denom / g;

  const int m = pat.m;
  std::vector<int> label(m), by_label(m), cyl_order;
  std::vector<char> cyl_visited(pat.t);
  std::vector<int> discovered;

  std::vector<long long> best_key;
  int best_start = -1, best_dir = 0;

  for (int start = 0; start < m; ++start) {
    for (int dir : {+1, -1}) {
      std::fill(label.begin(), label.end(), -1);
      std::fill(cyl_visited.begin(), cyl_visited.end(), 0);
      cyl_order.clear();
      discovered.clear();
      int next_label = 0;
      auto visit = [&](int c, int s0) {
        cyl_visited[c] = 1;
        cyl_order.push_back(c);
        int s = s0;
        for (int step = 0; step < pat.size_of[c]; ++step) {
          label[s] = next_label;
          by_label[next_label] = s;
          ++next_label;
          discovered.push_back(s);
          s = (dir > 0) ? pat.next_of[s] : pat.prev_of[s];
        }
      };
      visit(pat.cyl_of[start], start);
      for (size_t di = 0; di < discovered.size(); ++di) {
        int p = partner[discovered[di]];
        if (!cyl_visited[pat.cyl_of[p]]) visit(pat.cyl_of[p], p);
      }

      std::vector<long long> key;
      key.reserve(3 + 2 * pat.t + 2 * m);
      key.push_back(pat.t);
      key.push_back(m);
      key.push_back(d);
      for (int c : cyl_order) {
        key.push_back(circ[c]);
        key.push_back(pat.size_of[c]);
      }
      for (int l = 0; l < m; ++l) key.push_back(label[partner[by_label[l]]]);
      for (int l = 0; l < m; ++l) key.push_back(len[by_label[l]]);
      if (best_key.empty() || key < best_key) {
        best_key = std::move(key);
        best_start = start;
        best_dir = dir;
      }
    }
  }

  // rebuild the labeling for the winner and materialize the surface
  {
    std::fill(label.begin(), label.end(), -1);
    std::fill(cyl_visited.begin(), cyl_visited.end(), 0);
    cyl_order.clear();
    discovered.clear();
    int next_label = 0;
    auto visit = [&](int c, int s0) {
      cyl_visited[c] = 1;
      cyl_order.push_back(c);
      int s = s0;
      for (int step = 0; step < pat.size_of[c]; ++step) {
        label[s] = next_label;
        by_label[next_label] = s;
        ++next_label;
        discovered.push_back(s);
        s = (best_dir > 0) ? pat.next_of[s] : pat.prev_of[s];
      }
    };
    visit(pat.cyl_of[best_start], best_start);
    for (size_t di = 0; di < discovered.size(); ++di) {
      int p = partner[discovered[di]];
      if (!cyl_visited[pat.cyl_of[p]]) visit(pat.cyl_of[p], p);
    }
  }

  Canonical out;
  out.key = std::move(best_key);
  auto seg_name = [&](int seg) { return "s" + std::to_string(label[seg]); };
  int pos = 0;
  for (int c : cyl_order) {
    Cylinder cyl;
    cyl.circumference = Rational(static_cast<long>(circ[c]), static_cast<long>(d));
    cyl.circumference.canonicalize();
    for (int i = 0; i < pat.size_of[c]; ++i) cyl.boundary.push_back(seg_name(by_label[pos + i]));
    pos += pat.size_of[c];
    out.surface.cylinders.push_back(std::move(cyl));
  }
  std::set<std::pair<int, int>> seen_pairs;
  for (int l = 0; l < m; ++l) {
    int a = l, b = label[partner[by_label[l]]];
    seen_pairs.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : seen_pairs)
    out.surface.pairs.emplace_back("s" + std::to_string(a), "s" + std::to_string(b));
  for (int l = 0; l < m; ++l) {
    Rational q(static_cast<long>(len[by_label[l]]), static_cast<long>(d));
    q.canonicalize();
    out.surface.lengths["s" + std::to_string(l)] = q;
  }
  return out;
}

// ---------------------------------------------------------------------------
// pairing enumeration with incremental vertex-class pruning

struct PairingSearch {
  const Pattern& pat;
  const ClassCounts* target;  // nullptr: unconstrained
  bool use_symmetry_breaks;
  std::vector<int> partner;
  ClassCounts remaining;
  std::function<void(const std::vector<int>&)> emit;

  PairingSearch(const Pattern& p, const ClassCounts* classes, bool breaks,
                std::function<void(const std::vector<int>&)> cb)
      : pat(p), target(classes), use_symmetry_breaks(breaks), partner(p.m, -1),
        emit(std::move(cb)) {
    if (target) remaining = *target;
  }

  // walks rho = next-of-partner from seg; returns cycle length if it closes
  std::optional<int> closed_cycle_len(int seg) const {
    int cur = seg;
    int steps = 0;
    do {
      if (partner[cur] < 0) return std::nullopt;
      cur = pat.next_of[partner[cur]];
      ++steps;
      if (steps > pat.m) return std::nullopt;  // unreachable, defensive
    } while (cur != seg);
    return steps;
  }

  bool take_cycles(int i, int j, std::vector<int>& closed) {
    for (int seg : {i, j}) {
      auto len = closed_cycle_len(seg);
      if (!len) continue;
      if (seg == j) {
        // same cycle as i's? then it was already accounted
        bool same = false;
        int cur = i;
        if (closed.size() == 1) {
          do {
            if (partner[cur] < 0) break;
            cur = pat.next_of[partner[cur]];
            if (cur == j) same = true;
          } while (cur != i && !same);
        }
        if (same) continue;
      }
      if (target) {
        auto it = remaining.find(*len);
        if (it == remaining.end() || it->second == 0) return false;
        --it->second;
      }
      closed.push_back(*len);
    }
    return true;
  }

  void untake(const std::vector<int>& closed) {
    if (!target) return;
    for (int k : closed) ++remaining[k];
  }

  void run(int fixed_first_partner = -1) {
    int i = 0;
    while (i < pat.m && partner[i] >= 0) ++i;
    if (i == pat.m) {
      emit(partner);
      return;
    }
    std::vector<char> touched(pat.t, 0);
    for (int s = 0; s < pat.m; ++s)
      if (partner[s] >= 0) touched[pat.cyl_of[s]] = 1;
    touched[pat.cyl_of[i]] = 1;

    std::vector<char> class_used;  // symmetry: identical untouched cylinders
    for (int j = i + 1; j <= pat.m; ++j) {
      if (j == pat.m) break;
      if (partner[j] >= 0) continue;
      if (fixed_first_partner >= 0 && j != fixed_first_partner) continue;
      if (use_symmetry_breaks && !touched[pat.cyl_of[j]]) {
        // only the first boundary slot of the first untouched cylinder of
        // each (size) class: rotations and identical cylinders commute
        int c = pat.cyl_of[j];
        bool first_slot = (j == 0 || pat.cyl_of[j - 1] != c);
        if (!first_slot) continue;
        bool duplicate_class = false;
        for (int c2 = 0; c2 < c; ++c2) {
          if (touched[c2]) continue;
          if (pat.size_of[c2] == pat.size_of[c] && cyl_tag(c2) == cyl_tag(c)) {
            duplicate_class = true;
            break;
          }
        }
        if (duplicate_class) continue;
      }
      partner[i] = j;
      partner[j] = i;
      std::vector<int> closed;
      if (take_cycles(i, j, closed)) {
        run();
      }
      untake(closed);
      partner[i] = -1;
      partner[j] = -1;
    }
  }

  // cylinders are interchangeable when size and prescribed capacity agree
  std::function<long long(int)> cyl_tag = [](int) { return 0LL; };
};

// ---------------------------------------------------------------------------
// length assignment over a completed pairing

// Enumerates length assignments; with first_only set it stops after one
// feasible solution (a witness pattern realizes the same distribution for
// every choice of lengths, so one representative suffices).
void assign_lengths(const Pattern& pat, const std::vector<int>& partner,
                    const std::vector<long long>* capacity, int max_scaled_length, bool first_only,
                    const std::function<void(const std::vector<long long>&)>& emit) {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < pat.m; ++s)
    if (partner[s] > s) pairs.push_back({s, partner[s]});

  std::vector<long long> rem(pat.t, 0);
  std::vector<int> slots(pat.size_of.begin(), pat.size_of.end());
  if (capacity) rem = *capacity;
  std::vector<long long> seg_len(pat.m, 0);

  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == pairs.size()) {
      if (capacity) {
        for (int c = 0; c < pat.t; ++c)
          if (rem[c] != 0) return false;
      }
      emit(seg_len);
      return first_only;
    }
    auto [a, b] = pairs[idx];
    int ca = pat.cyl_of[a], cb = pat.cyl_of[b];
    long long hi;
    if (!capacity) {
      hi = max_scaled_length;
    } else if (ca == cb) {
      hi = (rem[ca] - (slots[ca] - 2)) / 2;
    } else {
      hi = std::min(rem[ca] - (slots[ca] - 1), rem[cb] - (slots[cb] - 1));
    }
    for (long long len = 1; len <= hi; ++len) {
      seg_len[a] = seg_len[b] = len;
      bool done = false;
      if (capacity) {
        rem[ca] -= len;
        rem[cb] -= len;
        slots[ca] -= 1;
        slots[cb] -= 1;
        bool ok = rem[ca] >= slots[ca] && rem[cb] >= slots[cb] &&
                  (slots[ca] > 0 || rem[ca] == 0) && (slots[cb] > 0 || rem[cb] == 0);
        if (ok) done = rec(idx + 1);
        rem[ca] += len;
        rem[cb] += len;
        slots[ca] += 1;
        slots[cb] += 1;
      } else {
        done = rec(idx + 1);
      }
      if (done) return true;
    }
    return false;
  };
  rec(0);
}

bool is_connected(const Pattern& pat, const std::vector<int>& partner) {
  if (pat.t == 0) return false;
  std::vector<char> seen(pat.t, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < pat.m; ++s) {
      if (pat.cyl_of[s] != c) continue;
      int oc = pat.cyl_of[partner[s]];
      if (!seen[oc]) {
        seen[oc] = 1;
        ++count;
        stack.push_back(oc);
      }
    }
  }
  return count == pat.t;
}

bool is_bipartite(const Pattern& pat, const std::vector<int>& partner) {
  std::vector<int> color(pat.t, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < pat.m; ++s) {
      if (pat.cyl_of[s] != c) continue;
      int oc = pat.cyl_of[partner[s]];
      if (oc == c) return false;
      if (color[oc] == -1) {
        color[oc] = 1 - color[c];
        stack.push_back(oc);
      } else if (color[oc] == color[c]) {
        return false;
      }
    }
  }
  return true;
}

bool square_ok(SquareMode mode, const Pattern& pat, const std::vector<int>& partner) {
  if (mode == SquareMode::Any) return true;
  bool sq = is_bipartite(pat, partner);
  return mode == SquareMode::Require ? sq : !sq;
}

// class multiset of a completed pairing (unconstrained searches)
ClassCounts vertex_classes(const Pattern& pat, const std::vector<int>& partner) {
  ClassCounts out;
  std::vector<char> visited(pat.m, 0);
  for (int s = 0; s < pat.m; ++s) {
    if (visited[s]) continue;
    int cur = s, k = 0;
    do {
      visited[cur] = 1;
      ++k;
      cur = pat.next_of[partner[cur]];
    } while (cur != s);
    ++out[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// work items and drivers

struct WorkItem {
  std::vector<int> sizes;          // composition
  std::vector<long long> capacity; // scaled circumference per cylinder (witness)
  int first_partner = -1;          // split dimension for parallel runs; -1 = all
};

struct TaskSpec {
  // witness mode when `capacity` is used (class targets + prescribed circumferences)
  bool witness = false;
  ClassCounts classes;
  SquareMode square = SquareMode::Any;
  long long denom = 1;
  int max_scaled_length = 0;  // census only
  std::optional<std::vector<Rational>> allowed_w;  // census only
};

void run_item(const TaskSpec& task, const WorkItem& item, bool symmetry_breaks,
              std::vector<Canonical>& out) {
  Pattern pat = Pattern::make(item.sizes);
  const ClassCounts* classes = task.witness ? &task.classes : nullptr;
  PairingSearch search(pat, classes, symmetry_breaks, nullptr);
  if (task.witness) {
    search.cyl_tag = [&](int c) { return item.capacity[c]; };
  }
  search.emit = [&](const std::vector<int>& partner) {
    if (!is_connected(pat, partner)) return;
    if (!square_ok(task.square, pat, partner)) return;
    const std::vector<long long>* cap = task.witness ? &item.capacity : nullptr;
    assign_lengths(pat, partner, cap, task.max_scaled_length, task.witness,
                   [&](const std::vector<long long>& seg_len) {
                     std::vector<long long> circ;
                     if (task.witness) {
                       circ = item.capacity;
                     } else {
                       circ.assign(pat.t, 0);
                       for (int s = 0; s < pat.m; ++s) circ[pat.cyl_of[s]] += seg_len[s];
                       if (task.allowed_w) {
                         for (int c = 0; c < pat.t; ++c) {
                           Rational w(static_cast<long>(circ[c]), static_cast<long>(task.denom));
                           w.canonicalize();
                           if (std::find(task.allowed_w->begin(), task.allowed_w->end(), w) ==
                               task.allowed_w->end())
                             return;
                         }
                       }
                     }
                     out.push_back(canonicalize(pat, partner, seg_len, circ, task.denom));
                   });
  };
  search.run(item.first_partner);
}

std::vector<JenkinsStrebelSurface> collect(std::vector<Canonical>&& found) {
  std::sort(found.begin(), found.end(),
            [](const Canonical& a, const Canonical& b) { return a.key < b.key; });
  std::vector<JenkinsStrebelSurface> out;
  for (size_t i = 0; i < found.size(); ++i) {
    if (i > 0 && found[i].key == found[i - 1].key) continue;
    out.push_back(std::move(found[i].surface));
  }
  return out;
}

std::vector<Canonical> run_items(const TaskSpec& task, const std::vector<WorkItem>& items,
                                 bool parallel, bool symmetry_breaks, int jobs) {
  std::vector<std::vector<Canonical>> buckets(items.size());
#ifdef _OPENMP
  if (parallel) {
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < items.size(); ++i)
      run_item(task, items[i], symmetry_breaks, buckets[i]);
  } else
#endif
  {
    (void)jobs;
    for (size_t i = 0; i < items.size(); ++i)
      run_item(task, items[i], symmetry_breaks, buckets[i]);
  }
  std::vector<Canonical> all;
  for (auto& b : buckets)
    for (auto& c : b) all.push_back(std::move(c));
  return all;
}

// compositions of m into t positive parts; when `nonincreasing` only sorted
// ones are produced (every surface reorders its cylinders that way)
void compositions(int m, int t, bool nonincreasing, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(t);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int cap) {
    if (pos == t) {
      if (left == 0) out.push_back(cur);
      return;
    }
    int remaining_slots = t - pos - 1;
    for (int v = 1; v <= left - remaining_slots; ++v) {
      if (nonincreasing && v > cap) break;
      cur[pos] = v;
      rec(pos + 1, left - v, v);
    }
  };
  rec(0, m, m);
}

std::vector<WorkItem> census_items(const CensusBounds& bounds, bool split_first_pair) {
  std::vector<WorkItem> items;
  for (int m = 2; m <= bounds.max_segments; m += 2) {
    for (int t = 1; t <= m; ++t) {
      std::vector<std::vector<int>> comps;
      compositions(m, t, split_first_pair, comps);
      for (auto& sizes : comps) {
        if (split_first_pair) {
          for (int j = 1; j < m; ++j) items.push_back({sizes, {}, j});
        } else {
          items.push_back({sizes, {}, -1});
        }
      }
    }
  }
  return items;
}

std::vector<JenkinsStrebelSurface> census(const CensusBounds& bounds, bool parallel, int jobs) {
  TaskSpec task;
  task.witness = false;
  task.denom = bounds.denominator;
  task.max_scaled_length = bounds.max_scaled_length;
  task.allowed_w = bounds.circumferences;
  auto items = census_items(bounds, parallel);
  return collect(run_items(task, items, parallel, parallel, jobs));
}

}  // namespace

std::vector<JenkinsStrebelSurface> enumerate_surfaces(const CensusBounds& bounds, int jobs) {
  return census(bounds, true, jobs);
}

std::vector<JenkinsStrebelSurface> enumerate_surfaces_serial(const CensusBounds& bounds) {
  return census(bounds, false, 0);
}

// ---------------------------------------------------------------------------
// witness search

namespace {

struct WitnessTask {
  std::vector<Rational> circumferences;  // descending
  std::vector<int> classes;              // corner counts k != 2, descending
  SquareMode square = SquareMode::Any;
};

// target circumference multiset scaled by D, all integers; nullopt when some
// denominator does not divide D
std::optional<std::vector<long long>> scale_circumferences(const std::vector<Rational>& w,
                                                           long long d) {
  std::vector<long long> out;
  for (const Rational& q : w) {
    Rational scaled = q * Rational(static_cast<long>(d));
    if (!is_integer(scaled)) return std::nullopt;
    out.push_back(scaled.get_num().get_si());
  }
  return out;
}

std::vector<Angle> dropped_regular(const AngleDistribution& dist) {
  std::vector<Angle> out;
  for (const Angle& a : dist.angles)
    if (!a.is_regular()) out.push_back(a);
  std::sort(out.begin(), out.end(), [](const Angle& a, const Angle& b) { return b < a; });
  return out;
}

}  // namespace

SearchResult search_witness(const AngleDistribution& dist, Monodromy cls,
                            const SearchBounds& bounds) {
  for (const Angle& a : dist.angles)
    if (a.has_generator_part())
      return {SearchStatus::SymbolicInput, std::nullopt,
              "witness search needs rational angles"};

  Partition part = partition(dist);
  std::vector<WitnessTask> tasks;
  bool any_class_unguarded = false;

  auto add_quad_tasks = [&]() {
    for (const StratumAssignment& asg :
         enumerate_quadratic_assignments(dist, AssignmentPolicy::Oracle)) {
      WitnessTask task;
      task.square = SquareMode::Forbid;
      for (const ExactReal& c : asg.circumferences) task.circumferences.push_back(c.rational_part());
      for (int d : asg.orders)
        if (d != 0) task.classes.push_back(d + 2);
      std::sort(task.circumferences.begin(), task.circumferences.end(), std::greater<>());
      std::sort(task.classes.begin(), task.classes.end(), std::greater<>());
      tasks.push_back(std::move(task));
    }
  };
  auto add_coaxial_tasks = [&]() {
    for (const CoaxialAssignment& asg :
         enumerate_coaxial_assignments(dist, AssignmentPolicy::Oracle)) {
      WitnessTask task;
      task.square = SquareMode::Require;
      for (const ExactReal& c : asg.pole_magnitudes)
        task.circumferences.push_back(c.rational_part());
      for (int a : asg.zero_orders) task.classes.push_back(2 * a + 2);
      std::sort(task.circumferences.begin(), task.circumferences.end(), std::greater<>());
      std::sort(task.classes.begin(), task.classes.end(), std::greater<>());
      tasks.push_back(std::move(task));
    }
  };

  if (cls == Monodromy::StrictDihedral || cls == Monodromy::DihedralAny) {
    if (!monodromy_guard(part, dist.genus, Monodromy::StrictDihedral)) {
      any_class_unguarded = true;
      add_quad_tasks();
    }
  }
  if (cls == Monodromy::Coaxial || cls == Monodromy::DihedralAny) {
    if (!monodromy_guard(part, dist.genus, Monodromy::Coaxial)) {
      any_class_unguarded = true;
      add_coaxial_tasks();
    }
  }
  if (!any_class_unguarded) {
    auto why = monodromy_guard(part, dist.genus,
                               cls == Monodromy::DihedralAny ? Monodromy::StrictDihedral : cls);
    return {SearchStatus::RejectedByGuard, std::nullopt, why ? why->text : "guarded"};
  }

  const std::vector<Angle> want = dropped_regular(dist);
  bool exceeded = false;
  std::string exceeded_note;

  for (const WitnessTask& task : tasks) {
    long long d0 = 1;
    for (const Rational& w : task.circumferences)
      d0 = std::lcm(d0, w.get_den().get_si());
    if (d0 > bounds.max_denominator) {
      exceeded = true;
      exceeded_note = "needs denominator " + std::to_string(d0);
      continue;
    }
    int base_segments = 0;
    for (int k : task.classes) base_segments += k;
    if (base_segments > bounds.max_segments) {
      exceeded = true;
      exceeded_note = "needs " + std::to_string(base_segments) + " segments";
      continue;
    }
    const int t = static_cast<int>(task.circumferences.size());
    if (t == 0) continue;

    for (long long denom = d0; denom <= bounds.max_denominator; denom += d0) {
      auto capacity = scale_circumferences(task.circumferences, denom);
      if (!capacity) continue;
      for (int extra = 0; extra <= bounds.max_regular; ++extra) {
        int m = base_segments + 2 * extra;
        if (m > bounds.max_segments) {
          if (extra == 0) exceeded = true;
          break;
        }
        if (m < t) continue;
        long long total_capacity = 0;
        for (long long c : *capacity) total_capacity += c;
        if (m > total_capacity) continue;  // every segment has scaled length >= 1

        TaskSpec spec;
        spec.witness = true;
        spec.square = task.square;
        spec.denom = denom;
        for (int k : task.classes) ++spec.classes[k];
        if (extra > 0) spec.classes[2] += extra;

        // compositions over cylinders sorted by capacity (equal-capacity
        // blocks get nonincreasing sizes; duplicates die in canonical dedup)
        std::vector<std::vector<int>> comps;
        compositions(m, t, false, comps);
        std::vector<WorkItem> items;
        for (auto& sizes : comps) {
          bool ok = true;
          for (int c = 0; c < t; ++c) {
            if (sizes[c] > (*capacity)[c]) ok = false;
            if (c > 0 && (*capacity)[c] == (*capacity)[c - 1] && sizes[c] > sizes[c - 1])
              ok = false;  // interchangeable cylinders
          }
          if (!ok) continue;
          WorkItem item;
          item.sizes = sizes;
          item.capacity = *capacity;
          if (m > 1) {
            for (int j = 1; j < m; ++j) {
              item.first_partner = j;
              items.push_back(item);
            }
          } else {
            items.push_back(item);
          }
        }
        auto found = run_items(spec, items, true, true, bounds.jobs);
        if (found.empty()) continue;
        auto surfaces = collect(std::move(found));
        for (auto& s : surfaces) {
          AngleDistribution realized = to_distribution(s, true);
          if (realized.genus != dist.genus) continue;
          if (dropped_regular(realized) != want) continue;
          return {SearchStatus::Found, std::move(s), ""};
        }
      }
    }
  }

  if (exceeded)
    return {SearchStatus::BoundsExceeded, std::nullopt, exceeded_note};
  return {SearchStatus::NoWitnessWithinBounds, std::nullopt, ""};
}

}  // namespace conesphere
