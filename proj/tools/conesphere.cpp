#include "conesphere/classifier.hpp"
#include "conesphere/report.hpp"
#include "conesphere/surface.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace cs = conesphere;

namespace {

// ---------------------------------------------------------------------------
// exact input parsing

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// grammar: term (('+'|'-') term)*, term = rational | rational '*' gen | gen
cs::ExactReal parse_exact(const std::string& text, const std::set<std::string>& generators) {
  if (text.empty()) throw std::invalid_argument("empty angle token");
  cs::ExactReal value;
  size_t pos = 0;
  int sign = +1;
  if (text[0] == '+' || text[0] == '-') {
    sign = text[0] == '-' ? -1 : +1;
    pos = 1;
  }
  while (pos <= text.size()) {
    size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string term = text.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed angle token: " + text);
    auto star = term.find('*');
    if (star != std::string::npos) {
      cs::Rational coeff = cs::parse_rational(term.substr(0, star));
      std::string gen = term.substr(star + 1);
      if (!generators.count(gen))
        throw std::invalid_argument("undeclared generator '" + gen + "' (use --gen)");
      value += cs::ExactReal::generator(gen, sign * coeff);
    } else if (generators.count(term)) {
      value += cs::ExactReal::generator(term, cs::Rational(sign));
    } else {
      value += cs::ExactReal(sign * cs::parse_rational(term));
    }
    if (end == text.size()) break;
    sign = text[end] == '-' ? -1 : +1;
    pos = end + 1;
  }
  return value;
}

cs::AngleDistribution parse_distribution(int genus, const std::string& angle_list,
                                         const std::string& units,
                                         const std::vector<std::string>& gens) {
  std::set<std::string> generators(gens.begin(), gens.end());
  cs::AngleDistribution dist;
  dist.genus = genus;
  for (const std::string& token : split_list(angle_list)) {
    cs::ExactReal value = parse_exact(token, generators);
    if (units == "pi") value *= cs::Rational(1, 2);  // v*pi = 2*pi*(v/2)
    dist.angles.push_back(cs::Angle(std::move(value)));
  }
  return dist;
}

// ---------------------------------------------------------------------------
// output

void print_verdict_human(const std::string& label, const cs::Verdict& v) {
  std::cout << label << ": " << (v.realizable ? "REALIZABLE" : "not realizable") << "\n";
  for (const auto& c : v.certificates)
    std::cout << "  certificate [" << c.id << "] " << c.detail << "\n";
  if (v.plain_gb == cs::PlainGaussBonnet::Fails)
    std::cout << "  plain Gauss-Bonnet fails\n";
  for (const auto& n : v.notes) std::cout << "  note: " << n << "\n";
}

struct OutputOptions {
  std::string format = "human";
};

int emit(const nlohmann::json& doc, const OutputOptions& opts,
         const std::function<void()>& human) {
  if (opts.format == "structured") {
    std::cout << doc.dump(2) << "\n";
  } else {
    human();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"realizability of cone angle distributions by spherical metrics with "
               "dihedral monodromy"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  app.add_option("--format", format, "human or structured")->check(CLI::IsMember({"human", "structured"}));

  // shared options
  int genus = 0;
  std::string angle_list, units = "pi", cls_name = "strict";
  std::vector<std::string> gens;
  cs::SearchBounds bounds;

  auto add_distribution_opts = [&](CLI::App* cmd, bool with_class = true) {
    cmd->add_option("--genus", genus, "genus of the surface")->required();
    cmd->add_option("--angles", angle_list, "comma-separated exact angles, e.g. 3/2,3/2,3/4")
        ->required();
    cmd->add_option("--units", units, "unit of the angle values: pi or 2pi (default pi)")
        ->check(CLI::IsMember({"pi", "2pi"}));
    cmd->add_option("--gen", gens, "declare an incommensurable generator name")->take_all();
    if (with_class)
      cmd->add_option("--class", cls_name, "coaxial, strict or any")
          ->check(CLI::IsMember({"coaxial", "strict", "any"}));
  };
  auto add_bounds_opts = [&](CLI::App* cmd) {
    cmd->add_option("--max-segments", bounds.max_segments, "segment budget for the search");
    cmd->add_option("--max-denominator", bounds.max_denominator, "finest length grid 1/D");
    cmd->add_option("--max-regular", bounds.max_regular, "extra regular vertex classes allowed");
    cmd->add_option("--jobs", bounds.jobs, "parallel workers (0 = all)");
  };
  auto monodromy_of = [](const std::string& name) {
    if (name == "coaxial") return cs::Monodromy::Coaxial;
    if (name == "strict") return cs::Monodromy::StrictDihedral;
    return cs::Monodromy::DihedralAny;
  };

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "decide realizability through both paths");
  add_distribution_opts(cmd_classify);
  add_bounds_opts(cmd_classify);
  bool with_witness = false;
  cmd_classify->add_flag("--witness", with_witness, "attach a surface witness when realizable");

  // residues
  auto* cmd_residues = app.add_subcommand("residues", "strata residue realizability predicates");
  std::string kind = "quadratic", orders_list, residues_list;
  cmd_residues->add_option("--kind", kind, "quadratic or abelian")
      ->check(CLI::IsMember({"quadratic", "abelian"}));
  cmd_residues->add_option("--genus", genus, "genus")->required();
  cmd_residues->add_option("--orders", orders_list, "zero/pole orders, comma separated");
  cmd_residues->add_option("--residues", residues_list, "residue configuration")->required();

  // surface-check
  auto* cmd_surface = app.add_subcommand("surface-check", "validate and analyze a surface file");
  std::string surface_path;
  cmd_surface->add_option("file", surface_path, "surface JSON document")->required();

  // witness
  auto* cmd_witness = app.add_subcommand("witness", "bounded exhaustive witness search");
  add_distribution_opts(cmd_witness);
  add_bounds_opts(cmd_witness);
  std::string out_path;
  cmd_witness->add_option("--out", out_path, "write the witness surface to this file");

  // crosscheck
  auto* cmd_crosscheck = app.add_subcommand(
      "crosscheck", "sweep a grid comparing the literal and reduction paths");
  std::string coeff_list = "1/2,3/4,1,5/4,3/2,2,5/2,3";
  int max_n = 5, max_genus = 2;
  cmd_crosscheck->add_option("--coeffs", coeff_list, "turn coefficients of the grid");
  cmd_crosscheck->add_option("--max-n", max_n, "largest distribution size");
  cmd_crosscheck->add_option("--max-genus", max_genus, "largest genus");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "census of surfaces within bounds");
  cs::CensusBounds census;
  std::string circ_list;
  bool count_only = false;
  int jobs = 0;
  cmd_enum->add_option("--max-segments", census.max_segments, "total segment budget");
  cmd_enum->add_option("--denominator", census.denominator, "length grid 1/D");
  cmd_enum->add_option("--max-length", census.max_scaled_length, "largest scaled segment length");
  cmd_enum->add_option("--circumferences", circ_list, "restrict cylinder circumferences");
  cmd_enum->add_flag("--count-only", count_only, "print only the census size");
  cmd_enum->add_option("--jobs", jobs, "parallel workers (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  OutputOptions out{format};

  try {
    if (*cmd_classify) {
      auto dist = parse_distribution(genus, angle_list, units, gens);
      cs::Monodromy cls = monodromy_of(cls_name);
      cs::ClassifyOptions opts;
      opts.attach_witness = with_witness;
      opts.witness_bounds = bounds;
      cs::Verdict merged = cs::classify(dist, cls, opts);
      cs::Verdict literal = cs::classify_literal(dist, cls);
      cs::Verdict reduction = cs::classify_via_strata(dist, cls);
      bool divergent = literal.realizable != reduction.realizable;

      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["command"] = "classify";
      doc["request"] = cs::distribution_to_json(dist);
      doc["request"]["class"] = cs::monodromy_str(cls);
      doc["verdict"] = cs::verdict_to_json(merged);
      doc["literal"] = cs::verdict_to_json(literal);
      doc["reduction"] = cs::verdict_to_json(reduction);
      doc["paths_divergent"] = divergent;
      return emit(doc, out, [&] {
        print_verdict_human("verdict", merged);
        print_verdict_human("literal path", literal);
        print_verdict_human("reduction path", reduction);
        if (divergent) std::cout << "paths diverge on this input (see notes)\n";
        if (merged.witness) {
          std::cout << "witness surface:\n" << cs::surface_to_json(*merged.witness) << "\n";
        }
      });
    }

    if (*cmd_residues) {
      std::vector<int> orders;
      if (!orders_list.empty())
        for (const auto& tok : split_list(orders_list))
          orders.push_back(std::stoi(tok));
      cs::StrataVerdict sv;
      std::string stratum_name;
      if (kind == "quadratic") {
        cs::QuadResidueConfig config;
        for (const auto& tok : split_list(residues_list))
          config.residues.push_back(cs::parse_rational(tok));
        auto stratum = cs::QuadraticStratum::make(genus, orders,
                                                  static_cast<int>(config.residues.size()));
        stratum_name = stratum.str();
        sv = cs::quad_residues_realizable(stratum, config);
      } else {
        cs::AbelianResidueConfig config;
        for (const auto& tok : split_list(residues_list))
          config.residues.push_back(cs::ExactReal(cs::parse_rational(tok)));
        auto stratum = cs::AbelianStratum::make(genus, orders,
                                                static_cast<int>(config.residues.size()));
        stratum_name = stratum.str();
        sv = cs::abelian_residues_realizable(stratum, config);
      }
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["command"] = "residues";
      doc["stratum"] = stratum_name;
      doc["realizable"] = sv.realizable;
      doc["clause"] = cs::strata_clause_id(sv.clause);
      doc["detail"] = sv.detail;
      return emit(doc, out, [&] {
        std::cout << stratum_name << ": " << (sv.realizable ? "realizable" : "not realizable")
                  << " (" << cs::strata_clause_id(sv.clause) << ")"
                  << (sv.detail.empty() ? "" : " " + sv.detail) << "\n";
      });
    }

    if (*cmd_surface) {
      std::ifstream in(surface_path);
      if (!in) {
        std::cerr << "cannot read " << surface_path << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      cs::JenkinsStrebelSurface s = cs::surface_from_json(buf.str());
      auto issues = cs::validate(s);
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["command"] = "surface-check";
      doc["valid"] = issues.empty();
      doc["issues"] = nlohmann::json::array();
      for (const auto& issue : issues) {
        doc["issues"].push_back({{"what", issue.what}, {"ids", issue.ids}});
      }
      if (issues.empty()) {
        cs::SurfaceReport report = cs::analyze(s);
        doc["genus"] = report.genus;
        doc["equatorial_angles"] = report.equatorial_angles;
        doc["pole_angles"] = nlohmann::json::array();
        for (const auto& w : report.pole_angles) doc["pole_angles"].push_back(cs::rational_str(w));
        doc["is_square"] = report.is_square;
        doc["monodromy_class"] = cs::monodromy_str(report.monodromy_class);
        doc["period_generators"] = nlohmann::json::array();
        for (const auto& q : report.period_generators)
          doc["period_generators"].push_back(cs::rational_str(q));
        doc["distribution"] = cs::distribution_to_json(cs::to_distribution(s, true));
      }
      return emit(doc, out, [&] {
        if (!issues.empty()) {
          std::cout << "invalid surface:\n";
          for (const auto& issue : issues) {
            std::cout << "  " << issue.what;
            for (const auto& id : issue.ids) std::cout << " " << id;
            std::cout << "\n";
          }
          return;
        }
        std::cout << doc.dump(2) << "\n";
      });
    }

    if (*cmd_witness) {
      auto dist = parse_distribution(genus, angle_list, units, gens);
      cs::Monodromy cls = monodromy_of(cls_name);
      cs::SearchResult res = cs::search_witness(dist, cls, bounds);
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["command"] = "witness";
      doc["request"] = cs::distribution_to_json(dist);
      doc["request"]["class"] = cs::monodromy_str(cls);
      const char* status = res.status == cs::SearchStatus::Found ? "found"
                           : res.status == cs::SearchStatus::NoWitnessWithinBounds
                               ? "no-witness-within-bounds"
                           : res.status == cs::SearchStatus::BoundsExceeded ? "bounds-exceeded"
                           : res.status == cs::SearchStatus::RejectedByGuard ? "rejected-by-guard"
                                                                             : "symbolic-input";
      doc["status"] = status;
      doc["note"] = res.note;
      if (res.witness) doc["witness"] = cs::surface_to_json_obj(*res.witness);
      if (res.witness && !out_path.empty()) {
        std::ofstream f(out_path);
        f << cs::surface_to_json(*res.witness) << "\n";
      }
      return emit(doc, out, [&] {
        std::cout << "witness search: " << status
                  << (res.note.empty() ? "" : " (" + res.note + ")") << "\n";
        if (res.witness && out_path.empty())
          std::cout << cs::surface_to_json(*res.witness) << "\n";
        else if (res.witness)
          std::cout << "written to " << out_path << "\n";
      });
    }

    if (*cmd_crosscheck) {
      cs::CrosscheckParams params;
      for (const auto& tok : split_list(coeff_list))
        params.coefficients.push_back(cs::parse_rational(tok));
      params.max_n = max_n;
      params.max_genus = max_genus;
      cs::CrosscheckReport report = cs::run_crosscheck(params);
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["command"] = "crosscheck";
      doc["cases"] = report.cases;
      doc["divergences"] = nlohmann::json::array();
      for (const auto& row : report.divergences) {
        nlohmann::json jr;
        jr["distribution"] = cs::distribution_to_json(row.dist);
        jr["class"] = cs::monodromy_str(row.cls);
        jr["literal"] = cs::verdict_to_json(row.literal);
        jr["reduction"] = cs::verdict_to_json(row.reduction);
        jr["documented"] = row.documented;
        doc["divergences"].push_back(std::move(jr));
      }
      doc["violations"] = report.violations;
      int rc = report.violations.empty() ? 0 : 3;
      emit(doc, out, [&] {
        std::cout << report.cases << " cases, " << report.divergences.size()
                  << " divergences\n";
        for (const auto& row : report.divergences) {
          std::cout << "  " << (row.documented ? "[documented] " : "[UNEXPECTED] ") << "g="
                    << row.dist.genus << " " << cs::monodromy_str(row.cls) << " turns";
          for (const auto& a : row.dist.angles) std::cout << " " << a.str();
          std::cout << " | literal " << (row.literal.realizable ? "yes" : "no") << " ["
                    << row.literal.certificates[0].id << " " << row.literal.certificates[0].detail
                    << "] vs reduction " << (row.reduction.realizable ? "yes" : "no") << " ["
                    << row.reduction.certificates[0].detail << "]\n";
        }
        for (const auto& v : report.violations) std::cout << "VIOLATION: " << v << "\n";
      });
      return rc;
    }

    if (*cmd_enum) {
      if (!circ_list.empty()) {
        census.circumferences.emplace();
        for (const auto& tok : split_list(circ_list))
          census.circumferences->push_back(cs::parse_rational(tok));
      }
      auto surfaces = cs::enumerate_surfaces(census, jobs);
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["command"] = "enumerate";
      doc["count"] = surfaces.size();
      if (!count_only) {
        doc["surfaces"] = nlohmann::json::array();
        for (const auto& s : surfaces) doc["surfaces"].push_back(cs::surface_to_json_obj(s));
      }
      return emit(doc, out, [&] {
        std::cout << surfaces.size() << " surfaces\n";
        if (!count_only)
          for (const auto& s : surfaces) std::cout << cs::surface_to_json(s) << "\n";
      });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
