// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is expected as argv[1] (used by criterion 6).

#include "conesphere/classifier.hpp"
#include "conesphere/report.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace conesphere;

namespace {

Rational q(const char* s) { return parse_rational(s); }

AngleDistribution dist_of(int genus, const std::vector<Rational>& turns) {
  AngleDistribution d;
  d.genus = genus;
  for (const Rational& t : turns) d.angles.push_back(Angle(t));
  return d;
}

std::string dist_str(const AngleDistribution& d) {
  std::ostringstream out;
  out << "g=" << d.genus << " turns";
  for (const Angle& a : d.angles) out << " " << a.str();
  return out.str();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 12) problems.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// criterion 1: paper-example suite, exact, each case < 1 s

void sub_case(Outcome& out, const char* label, const std::function<void(Outcome&)>& body) {
  auto start = Clock::now();
  body(out);
  double dt = seconds_since(start);
  if (dt >= 1.0) out.expect(false, std::string(label) + " took " + std::to_string(dt) + "s");
}

Outcome criterion1() {
  Outcome out;
  sub_case(out, "(a)", [](Outcome& out) {
    auto dist = dist_of(0, {q("3/2"), q("3/2"), q("3/2"), q("3/4"), q("3/4")});
    Verdict v = classify(dist, Monodromy::StrictDihedral);
    out.expect(!v.realizable, "(a) worked example must not be realizable");
    Verdict red = classify_via_strata(dist, Monodromy::StrictDihedral);
    out.expect(!red.realizable, "(a) reduction path must reject");
    out.expect(!red.certificates.empty() &&
                   red.certificates[0].detail.find("Q(1,1,-2^3)") != std::string::npos,
               "(a) certificate must name the stratum Q(1,1,-2^3)");
    out.expect(red.certificates[0].detail.find("even-weight") != std::string::npos,
               "(a) certificate must name the even-weight clause");
  });
  sub_case(out, "(b)", [](Outcome& out) {
    auto dist = dist_of(1, {q("3")});
    out.expect(!classify(dist, Monodromy::StrictDihedral).realizable,
               "(b) 6pi on the torus must not be strictly realizable");
    out.expect(classify(dist, Monodromy::Coaxial).realizable,
               "(b) 6pi on the torus must be coaxially realizable");
  });
  sub_case(out, "(c)", [](Outcome& out) {
    auto dist = dist_of(0, {q("1/2"), q("1/2"), q("3/4")});
    ClassifyOptions opts;
    opts.attach_witness = true;
    opts.witness_bounds.max_segments = 4;
    Verdict v = classify(dist, Monodromy::StrictDihedral, opts);
    out.expect(v.realizable, "(c) pi,pi,3pi/2 must be strictly realizable");
    out.expect(v.witness.has_value(), "(c) witness must be attached");
    if (v.witness) {
      auto report = analyze(*v.witness);
      out.expect(report.genus == 0 && report.equatorial_angles == std::vector<int>{1, 1} &&
                     report.pole_angles == std::vector<Rational>{q("3/4")} && !report.is_square,
                 "(c) witness must be the folded hemispherical sector");
      auto realized = to_distribution(*v.witness, true);
      out.expect(realized.genus == 0 && realized.angles.size() == 3 &&
                     realized.angles[0] == Angle(q("3/4")) &&
                     realized.angles[1] == Angle(q("1/2")) &&
                     realized.angles[2] == Angle(q("1/2")),
                 "(c) witness round trip must reproduce the distribution");
    }
  });
  sub_case(out, "(d)", [](Outcome& out) {
    auto quad = [](std::vector<int> orders, std::vector<Rational> residues) {
      const int genus = orders.size() == 1 ? 1 : 0;
      const int poles = static_cast<int>(residues.size());
      auto stratum = QuadraticStratum::make(genus, std::move(orders), poles);
      return quad_residues_realizable(stratum, {std::move(residues)});
    };
    out.expect(!quad({4}, {q("1"), q("1")}).realizable, "(d) Q(4,-2^2) with (1,1) must fail");
    out.expect(quad({4}, {q("1"), q("2")}).realizable, "(d) Q(4,-2^2) with (1,2) must pass");
    out.expect(!quad({1, 1}, {q("1"), q("4"), q("9")}).realizable,
               "(d) Q(1,1,-2^3) with (1,4,9) must fail");
    out.expect(!quad({1, 1}, {q("9/16"), q("9/16"), q("9/4")}).realizable,
               "(d) Q(1,1,-2^3) with (9/16,9/16,9/4) must fail");
    out.expect(quad({1, 1}, {q("1"), q("4"), q("16")}).realizable,
               "(d) Q(1,1,-2^3) with (1,4,16) must pass");
  });
  sub_case(out, "(e)", [](Outcome& out) {
    auto abelian = [](std::vector<Rational> residues) {
      AbelianResidueConfig config;
      for (auto& r : residues) config.residues.push_back(ExactReal(std::move(r)));
      auto stratum = AbelianStratum::make(0, {2}, static_cast<int>(config.residues.size()));
      return abelian_residues_realizable(stratum, config);
    };
    out.expect(!abelian({q("1"), q("1"), q("-1"), q("-1")}).realizable,
               "(e) H(2,-1^4) with (1,1,-1,-1) must fail");
    out.expect(abelian({q("2"), q("1"), q("-2"), q("-1")}).realizable,
               "(e) H(2,-1^4) with (2,1,-2,-1) must pass");
  });
  return out;
}

// ---------------------------------------------------------------------------
// criterion 2: exceptional-family fuzz + generic mutations, <= 1 min

struct FamilyInstance {
  AngleDistribution dist;
  Monodromy cls = Monodromy::StrictDihedral;
  std::string label;
  std::vector<int> mutable_idx;  // non-integer entries eligible for mutation
};

Rational random_nonint(std::mt19937& rng) {
  std::uniform_int_distribution<int> den_pick(3, 8), num_pick(1, 30);
  for (;;) {
    Rational v(num_pick(rng), den_pick(rng));
    v.canonicalize();
    if (v.get_den() >= 3 && v < 4) return v;  // not integer, not half-integer
  }
}

void add_instance(std::vector<FamilyInstance>& list, int genus, Monodromy cls,
                  const std::string& label, const std::vector<Rational>& turns) {
  FamilyInstance inst;
  inst.dist = dist_of(genus, turns);
  inst.cls = cls;
  inst.label = label;
  for (int i = 0; i < inst.dist.size(); ++i)
    if (parity_of(inst.dist.angles[i]) == Parity::NonInteger) inst.mutable_idx.push_back(i);
  list.push_back(std::move(inst));
}

std::vector<FamilyInstance> family_instances() {
  std::mt19937 rng(20260809);
  std::vector<FamilyInstance> list;
  const int draws = 20;
  const Rational half(1, 2), one(1);

  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < draws; ++trial) {
      Rational alpha = random_nonint(rng);
      std::vector<Rational> f1{Rational(2 * k + 1)};
      std::vector<Rational> f2{Rational(k) + Rational(3, 2), Rational(k) + half};
      for (int i = 0; i < 2 * k; ++i) {
        f1.push_back(alpha);
        f2.push_back(alpha);
      }
      add_instance(list, 1, Monodromy::StrictDihedral, "prop5.1-family1 k=" + std::to_string(k),
                   f1);
      add_instance(list, 1, Monodromy::StrictDihedral, "prop5.1-family2 k=" + std::to_string(k),
                   f2);
    }
  }
  for (int k = 0; k <= 3; ++k) {
    add_instance(list, 1, Monodromy::StrictDihedral, "prop5.1-family3 k=" + std::to_string(k),
                 {Rational(2 * k + 1)});
    add_instance(list, 1, Monodromy::StrictDihedral, "prop5.1-family4 k=" + std::to_string(k),
                 {Rational(k) + Rational(3, 2), Rational(k) + half});
  }

  // Prop 6.4 on its valid diagonal l = k (k >= 1)
  for (int k = 1; k <= 3; ++k) {
    Rational b = Rational(k) + half;  // each odd angle is (2k+1)pi
    for (int trial = 0; trial < draws; ++trial) {
      int variant = trial % 3;
      Rational alpha, beta;
      for (;;) {
        alpha = random_nonint(rng);
        if (variant == 0) {
          beta = b - alpha;  // alpha + beta = (2l+1)pi
        } else if (variant == 1) {
          beta = alpha + b;  // beta = alpha + (2l+1)pi
        } else {
          beta = alpha - b;  // alpha = beta + (2l+1)pi
        }
        if (beta <= 0) continue;
        Rational br = beta;
        br.canonicalize();
        if (br.get_den() >= 3) break;
      }
      std::vector<Rational> turns{b, b, b};
      for (int i = 0; i < 2 * k - 1; ++i) turns.push_back(alpha);
      turns.push_back(beta);
      add_instance(list, 0, Monodromy::StrictDihedral,
                   "prop6.4 k=l=" + std::to_string(k) + " v" + std::to_string(variant), turns);
    }
  }

  // Prop 6.8 families
  for (int k = 0; k <= 3; ++k) {
    Rational b1 = Rational(k) + Rational(3, 2), b2 = Rational(k) + half;
    for (int trial = 0; trial < draws; ++trial) {
      Rational alpha = random_nonint(rng), beta = random_nonint(rng);
      std::vector<Rational> f1{b1, b2};
      for (int i = 0; i < 2 * k; ++i) f1.push_back(alpha);
      f1.push_back(beta);
      f1.push_back(beta);
      add_instance(list, 0, Monodromy::StrictDihedral, "prop6.8-family1 k=" + std::to_string(k),
                   f1);
      if (k >= 1) {
        std::vector<Rational> f2{b1, b2};
        for (int i = 0; i < 2 * k; ++i) f2.push_back(alpha);
        add_instance(list, 0, Monodromy::StrictDihedral, "prop6.8-family2 k=" + std::to_string(k),
                     f2);
      }
      add_instance(list, 0, Monodromy::StrictDihedral, "prop6.8-family3 k=" + std::to_string(k),
                   {b1, b2, alpha, alpha});
    }
  }

  // Prop 6.9 families
  for (int k = 0; k <= 3; ++k) {
    Rational b = Rational(k) + Rational(3, 2);
    for (int trial = 0; trial < draws; ++trial) {
      Rational beta = random_nonint(rng);
      Rational gamma = random_nonint(rng);
      Rational alpha = beta + gamma;
      alpha.canonicalize();
      if (alpha.get_den() >= 3) {
        std::vector<Rational> g1{b, b};
        for (int i = 0; i < 2 * k + 1; ++i) g1.push_back(alpha);
        g1.push_back(beta);
        g1.push_back(gamma);
        add_instance(list, 0, Monodromy::StrictDihedral, "prop6.9-family1 k=" + std::to_string(k),
                     g1);
      }
      Rational a2 = random_nonint(rng), b2v = random_nonint(rng);
      Rational sum2 = a2 + b2v;
      sum2.canonicalize();
      if (sum2.get_den() >= 3) {
        std::vector<Rational> g2{b, b};
        for (int i = 0; i < 2 * k + 1; ++i) g2.push_back(a2);
        g2.push_back(b2v);
        g2.push_back(sum2);
        add_instance(list, 0, Monodromy::StrictDihedral, "prop6.9-family2 k=" + std::to_string(k),
                     g2);
      }
      // family 3: alpha x (2k+1), beta with one of the three unit relations
      int variant = trial % 3;
      Rational a3, b3;
      for (;;) {
        a3 = random_nonint(rng);
        if (variant == 0) {
          b3 = one - a3;
        } else if (variant == 1) {
          b3 = a3 + one;
        } else {
          b3 = a3 - one;
        }
        if (b3 <= 0) continue;
        Rational br = b3;
        br.canonicalize();
        if (br.get_den() >= 3) break;
      }
      std::vector<Rational> g3{b, b};
      for (int i = 0; i < 2 * k + 1; ++i) g3.push_back(a3);
      g3.push_back(b3);
      add_instance(list, 0, Monodromy::StrictDihedral, "prop6.9-family3 k=" + std::to_string(k),
                   g3);
      Rational a4 = random_nonint(rng);
      add_instance(list, 0, Monodromy::StrictDihedral, "prop6.9-family4 k=" + std::to_string(k),
                   {b, b, a4, a4 + one});
      Rational a5 = random_nonint(rng);
      while (a5 >= 1) a5 = random_nonint(rng);
      add_instance(list, 0, Monodromy::StrictDihedral, "prop6.9-family5 k=" + std::to_string(k),
                   {b, b, a5, one - a5});
    }
  }
  return list;
}

Outcome criterion2(int& mutation_skips) {
  Outcome out;
  auto instances = family_instances();
  const std::vector<Rational> epsilons = {q("1/64"),  q("-1/64"), q("1/96"),
                                          q("5/128"), q("1/128"), q("-5/192")};
  mutation_skips = 0;
  for (const auto& inst : instances) {
    Verdict v = classify(inst.dist, inst.cls);
    out.expect(!v.realizable, inst.label + " must not be realizable: " + dist_str(inst.dist));
    Verdict red = classify_via_strata(inst.dist, inst.cls);
    out.expect(!red.realizable, inst.label + " reduction must reject: " + dist_str(inst.dist));

    if (inst.mutable_idx.empty()) {
      ++mutation_skips;  // no epsilon keeps strengthened Gauss-Bonnet
      continue;
    }
    bool mutated_ok = false;
    bool found_candidate = false;
    for (const Rational& eps : epsilons) {
      AngleDistribution mutated = inst.dist;
      int idx = inst.mutable_idx[0];
      Rational v2 = mutated.angles[idx].turn() + eps;
      v2.canonicalize();
      if (v2 <= 0 || v2.get_den() <= 2) continue;
      mutated.angles[idx] = Angle(v2);
      if (!strengthened_gb(partition(mutated), mutated.genus)) continue;
      Verdict lit = classify_literal(mutated, inst.cls);
      if (!lit.certificates.empty() && lit.certificates[0].id.rfind("prop", 0) == 0)
        continue;  // still inside a family, try another epsilon
      found_candidate = true;
      mutated_ok = classify_via_strata(mutated, inst.cls).realizable &&
                   classify(mutated, inst.cls).realizable;
      break;
    }
    if (!found_candidate) {
      ++mutation_skips;
      continue;
    }
    out.expect(mutated_ok,
               inst.label + " generic mutation must be realizable: " + dist_str(inst.dist));
  }
  return out;
}

// ---------------------------------------------------------------------------
// criterion 3: cross-path agreement on the spec grid, <= 10 min

Outcome criterion3(std::string& summary) {
  Outcome out;
  CrosscheckParams params;
  for (const char* c : {"1/2", "3/4", "1", "5/4", "3/2", "2", "5/2", "3"})
    params.coefficients.push_back(q(c));
  params.max_n = 5;
  params.max_genus = 2;
  CrosscheckReport report = run_crosscheck(params);
  for (const auto& violation : report.violations) out.expect(false, violation);
  for (const auto& row : report.divergences) {
    out.expect(row.documented, "undocumented divergence: " + dist_str(row.dist));
    out.expect(!row.literal.certificates.empty() && !row.reduction.certificates.empty(),
               "divergence rows must carry both certificates");
  }
  std::ostringstream s;
  s << report.cases << " cases, " << report.divergences.size() << " documented divergences";
  summary = s.str();
  for (const auto& row : report.divergences) {
    std::printf("    divergent: %s %s | literal %s [%s %s] | reduction %s [%s]\n",
                dist_str(row.dist).c_str(), monodromy_str(row.cls),
                row.literal.realizable ? "yes" : "no", row.literal.certificates[0].id.c_str(),
                row.literal.certificates[0].detail.c_str(),
                row.reduction.realizable ? "yes" : "no",
                row.reduction.certificates[0].detail.c_str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// criterion 4: oracle soundness and completeness at desk scale, <= 30 min

std::vector<Rational> sweep_values() {
  std::vector<Rational> out;
  for (int den = 1; den <= 4; ++den) {
    for (int num = 1; num <= 4 * den; ++num) {
      Rational v(num, den);
      v.canonicalize();
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  return out;
}

Outcome criterion4(long long& cases_run) {
  Outcome out;
  const auto values = sweep_values();
  const int m = static_cast<int>(values.size());

  std::vector<std::vector<int>> picks;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (!cur.empty()) picks.push_back(cur);
    if (left == 0) return;
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i, left - 1);
      cur.pop_back();
    }
  };
  rec(0, 4);

  // every integer/half-integer coefficient may sit on the equator at a cost
  // of 2u corners
  std::vector<AngleDistribution> sweep;
  for (const auto& pick : picks) {
    Rational corners = 0;
    AngleDistribution d;
    d.genus = 0;
    for (int idx : pick) {
      const Rational& v = values[idx];
      if (v.get_den() <= 2) corners += 2 * v;
      d.angles.push_back(Angle(v));
    }
    if (corners > 8) continue;
    sweep.push_back(std::move(d));
  }

  SearchBounds bounds;
  bounds.max_segments = 8;
  bounds.max_denominator = 24;
  bounds.max_regular = 2;

  std::vector<std::string> failures;
  long long done = 0;

#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < sweep.size(); ++i) {
    const AngleDistribution& dist = sweep[i];
    for (Monodromy cls : {Monodromy::StrictDihedral, Monodromy::Coaxial}) {
      Verdict v = classify(dist, cls);
      SearchResult res = search_witness(dist, cls, bounds);
      std::string what;
      if (v.realizable) {
        if (res.status != SearchStatus::Found) {
          what = "classifier YES but no witness: " + dist_str(dist) + " " + monodromy_str(cls) +
                 " (" + res.note + ")";
        } else {
          auto realized = to_distribution(*res.witness, true);
          std::vector<Angle> want;
          for (const Angle& a : dist.angles)
            if (!a.is_regular()) want.push_back(a);
          std::sort(want.begin(), want.end(),
                    [](const Angle& a, const Angle& b) { return b < a; });
          std::vector<Angle> got;
          for (const Angle& a : realized.angles)
            if (!a.is_regular()) got.push_back(a);
          std::sort(got.begin(), got.end(), [](const Angle& a, const Angle& b) { return b < a; });
          if (realized.genus != 0 || got != want)
            what = "witness round trip mismatch: " + dist_str(dist) + " " + monodromy_str(cls);
          else if (!validate(*res.witness).empty())
            what = "witness fails validation: " + dist_str(dist);
        }
      } else {
        if (res.status == SearchStatus::Found)
          what = "classifier NO but witness exists: " + dist_str(dist) + " " + monodromy_str(cls);
        else if (res.status == SearchStatus::BoundsExceeded)
          what = "search bounds too small to certify NO: " + dist_str(dist) + " " +
                 monodromy_str(cls) + " (" + res.note + ")";
      }
#pragma omp critical
      {
        ++done;
        if (!what.empty() && failures.size() < 20) failures.push_back(what);
      }
    }
  }
  for (const auto& f : failures) out.expect(false, f);
  cases_run = done;
  return out;
}

// ---------------------------------------------------------------------------
// criterion 5: surface property suite on >= 10,000 enumerated surfaces

Outcome criterion5(long long& surface_count) {
  Outcome out;
  CensusBounds bounds;
  bounds.max_segments = 8;
  bounds.denominator = 1;
  bounds.max_scaled_length = 4;
  auto surfaces = enumerate_surfaces(bounds);
  surface_count = static_cast<long long>(surfaces.size());
  out.expect(surface_count >= 10000, "census must contain at least 10000 surfaces");
  for (const auto& s : surfaces) {
    if (!validate(s).empty()) {
      out.expect(false, "census surface fails validation");
      break;
    }
    auto report = analyze(s);
    int vertices = static_cast<int>(report.equatorial_angles.size());
    int edges = static_cast<int>(s.pairs.size());
    int faces = static_cast<int>(s.cylinders.size());
    if ((vertices - edges + faces) % 2 != 0) {
      out.expect(false, "Euler characteristic parity violated");
      break;
    }
    if (report.genus < 0) {
      out.expect(false, "negative genus in census");
      break;
    }
    if (report.is_square) {
      for (int k : report.equatorial_angles)
        if (k % 2 != 0) {
          out.expect(false, "square surface with an odd equatorial angle");
          break;
        }
    }
    // stratum equation: equatorial orders k-2 plus order -2 per double pole
    // sum to 4g-4
    long long lhs = 0;
    for (int k : report.equatorial_angles) lhs += k - 2;
    if (lhs != 4LL * report.genus - 4 + 2LL * faces) {
      out.expect(false, "stratum reconciliation identity violated");
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// criterion 6: invariance suite (permutations, scales, CLI unit modes)

std::string run_cli(const std::string& cli, const std::string& args, int& rc) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    rc = -1;
    return "";
  }
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  rc = pclose(pipe);
  return output;
}

Outcome criterion6(const std::string& cli) {
  Outcome out;
  std::mt19937 rng(2718281);

  // permutation invariance, 1000 shuffles across five base distributions
  std::vector<AngleDistribution> bases = {
      dist_of(0, {q("3/2"), q("3/2"), q("3/2"), q("3/4"), q("3/4")}),
      dist_of(0, {q("1/2"), q("1/2"), q("3/4"), q("5/4"), q("2")}),
      dist_of(1, {q("3"), q("1/2"), q("1/2")}),
      dist_of(0, {q("2"), q("3/2"), q("1/2"), q("3/4")}),
      dist_of(2, {q("3"), q("3/2"), q("3/2")}),
  };
  for (const auto& base : bases) {
    bool strict0 = classify(base, Monodromy::StrictDihedral).realizable;
    bool coax0 = classify(base, Monodromy::Coaxial).realizable;
    AngleDistribution shuffled = base;
    for (int i = 0; i < 200; ++i) {
      std::shuffle(shuffled.angles.begin(), shuffled.angles.end(), rng);
      if (classify(shuffled, Monodromy::StrictDihedral).realizable != strict0 ||
          classify(shuffled, Monodromy::Coaxial).realizable != coax0) {
        out.expect(false, "verdict changed under permutation: " + dist_str(base));
        break;
      }
    }
  }

  // residue scale invariance, 100 random positive rational scales
  std::uniform_int_distribution<int> num(1, 12), den(1, 9);
  auto q_stratum = QuadraticStratum::make(0, {1, 1}, 3);
  std::vector<std::vector<Rational>> q_configs = {
      {q("1"), q("4"), q("9")}, {q("9/16"), q("9/16"), q("9/4")}, {q("1"), q("4"), q("16")}};
  auto a_stratum = AbelianStratum::make(0, {2}, 4);
  std::vector<Rational> a_config = {q("1"), q("1"), q("-1"), q("-1")};
  for (int trial = 0; trial < 100; ++trial) {
    Rational s(num(rng), den(rng));
    s.canonicalize();
    for (const auto& config : q_configs) {
      QuadResidueConfig base{config}, scaled;
      for (const auto& r : config) scaled.residues.push_back(r * s);
      auto v0 = quad_residues_realizable(q_stratum, base);
      auto v1 = quad_residues_realizable(q_stratum, scaled);
      if (v0.realizable != v1.realizable || v0.clause != v1.clause) {
        out.expect(false, "quadratic predicate not scale invariant");
        break;
      }
    }
    AbelianResidueConfig base, scaled;
    for (const auto& r : a_config) {
      base.residues.push_back(ExactReal(r));
      scaled.residues.push_back(ExactReal(r * s));
    }
    auto v0 = abelian_residues_realizable(a_stratum, base);
    auto v1 = abelian_residues_realizable(a_stratum, scaled);
    if (v0.realizable != v1.realizable || v0.clause != v1.clause)
      out.expect(false, "abelian predicate not scale invariant");
  }

  // CLI unit-mode equivalence: the same geometric input under --units pi and
  // --units 2pi yields identical structured verdicts
  struct UnitCase {
    const char* pi_angles;
    const char* turn_angles;
    const char* genus;
    const char* cls;
  };
  std::vector<UnitCase> unit_cases = {
      {"3,3,3,3/2,3/2", "3/2,3/2,3/2,3/4,3/4", "0", "strict"},
      {"1,1,3/2", "1/2,1/2,3/4", "0", "strict"},
      {"6", "3", "1", "coaxial"},
      {"4,3,1", "2,3/2,1/2", "0", "coaxial"},
      {"5,3,5/2,5/2", "5/2,3/2,5/4,5/4", "0", "any"},
  };
  for (const auto& c : unit_cases) {
    int rc1 = 0, rc2 = 0;
    std::string out1 = run_cli(cli, std::string("classify --genus ") + c.genus + " --class " +
                                        c.cls + " --units pi --angles " + c.pi_angles +
                                        " --format structured",
                               rc1);
    std::string out2 = run_cli(cli, std::string("classify --genus ") + c.genus + " --class " +
                                        c.cls + " --units 2pi --angles " + c.turn_angles +
                                        " --format structured",
                               rc2);
    if (rc1 != 0 || rc2 != 0 || out1.empty()) {
      out.expect(false, std::string("CLI invocation failed for ") + c.pi_angles);
      continue;
    }
    auto doc1 = nlohmann::json::parse(out1);
    auto doc2 = nlohmann::json::parse(out2);
    out.expect(doc1["verdict"] == doc2["verdict"] && doc1["literal"] == doc2["literal"] &&
                   doc1["reduction"] == doc2["reduction"],
               std::string("unit modes disagree for ") + c.pi_angles);
    Verdict v = verdict_from_json(doc1["verdict"]);
    out.expect(verdict_to_json(v) == doc1["verdict"],
               std::string("structured verdict does not round trip for ") + c.pi_angles);
  }
  return out;
}

void report(int number, const char* name, const Outcome& out, double dt,
            const std::string& extra = "") {
  std::string suffix = extra.empty() ? "" : " [" + extra + "]";
  std::printf("%s criterion %d: %s (%.1fs)%s\n", out.pass ? "PASS" : "FAIL", number, name, dt,
              suffix.c_str());
  for (const auto& p : out.problems) std::printf("    problem: %s\n", p.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "./conesphere";
  int failures = 0;
  auto run = [&](int number, const char* name,
                 const std::function<Outcome(std::string&)>& body) {
    auto start = Clock::now();
    std::string extra;
    Outcome out = body(extra);
    report(number, name, out, seconds_since(start), extra);
    if (!out.pass) ++failures;
  };

  run(1, "paper-example suite", [](std::string&) { return criterion1(); });
  run(2, "exceptional-family fuzz", [](std::string& extra) {
    int skips = 0;
    Outcome out = criterion2(skips);
    extra = std::to_string(skips) + " mutation skips (no eps keeps strengthened GB)";
    return out;
  });
  run(3, "cross-path agreement", [](std::string& extra) { return criterion3(extra); });
  run(4, "oracle soundness and completeness", [](std::string& extra) {
    long long cases = 0;
    Outcome out = criterion4(cases);
    extra = std::to_string(cases) + " (distribution, class) cases";
    return out;
  });
  run(5, "surface property suite", [](std::string& extra) {
    long long count = 0;
    Outcome out = criterion5(count);
    extra = std::to_string(count) + " surfaces";
    return out;
  });
  run(6, "invariance suite", [&](std::string&) { return criterion6(cli); });

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
