// census: command line front end for the cover census library.
//
// Every subcommand prints one JSON report to stdout (or an indented text
// rendering with --format text) and a one-line summary to stderr. Exit codes:
// 0 success, 1 bad input, 2 search budget or enumeration cap exceeded.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "census/bundles.hpp"
#include "census/crystallographic.hpp"
#include "census/finitegroups.hpp"
#include "census/fuchsian.hpp"
#include "census/homology.hpp"
#include "census/jsonio.hpp"
#include "census/lowindex.hpp"
#include "census/presentations.hpp"
#include "census/topology.hpp"

#ifndef COVERCENSUS_VERSION
#define COVERCENSUS_VERSION "0.0.0"
#endif

namespace {

using census::Int;
using nlohmann::ordered_json;

struct Outcome {
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::optional<ordered_json> witness;
  std::string summary;
};

census::Presentation load_presentation(const std::string& path) {
  if (path == "-") return census::read_presentation(std::cin);
  return census::load_presentation_file(path);
}

ordered_json words_json(const std::vector<census::Word>& words,
                        const std::vector<std::string>& names) {
  ordered_json out = ordered_json::array();
  for (const census::Word& w : words) out.push_back(census::render_word(w, names));
  return out;
}

ordered_json abelian_json(const census::AbelianGroup& A) {
  return ordered_json(census::abelian_to_json(A));
}

ordered_json subgroup_witness_json(const census::SubgroupWitness& w) {
  return ordered_json{{"kind", "subgroup_pair"},
                      {"index", w.index},
                      {"elements_a", w.elements_a},
                      {"elements_b", w.elements_b},
                      {"fingerprint_a", w.fingerprint_a},
                      {"fingerprint_b", w.fingerprint_b}};
}

ordered_json bundle_cover_json(const census::BundleCover& c) {
  return ordered_json{{"genus", c.total.genus},
                      {"euler", c.total.euler},
                      {"base_degree", c.base_degree},
                      {"fiber_degree", c.fiber_degree}};
}

ordered_json bundle_witness_json(const census::CircleBundleWitness& w) {
  if (!w.has_witness) return ordered_json{{"kind", "bundle_pair"}, {"reason", w.reason}};
  return ordered_json{{"kind", "bundle_pair"},
                      {"degree", w.degree},
                      {"cover_a", bundle_cover_json(w.cover_a)},
                      {"cover_b", bundle_cover_json(w.cover_b)},
                      {"h1_a", abelian_json(w.h1_a)},
                      {"h1_b", abelian_json(w.h1_b)}};
}

ordered_json sol_witness_json(const census::SolWitness& w) {
  return ordered_json{{"kind", "sol_traces"},
                      {"degree", w.degree},
                      {"base_trace", w.base_trace.str()},
                      {"power_trace", w.power_trace.str()}};
}

ordered_json sum_witness_json(const census::SumCoverWitness& w) {
  return ordered_json{{"kind", "sum_covers"},   {"degree", w.degree},
                      {"k", w.k},               {"cover_a", w.cover_a},
                      {"cover_b", w.cover_b},   {"pieces_a", w.pieces_a},
                      {"pieces_b", w.pieces_b}, {"spheres_a", w.spheres_a},
                      {"spheres_b", w.spheres_b}, {"distinguisher", w.distinguisher}};
}

ordered_json verdict_witness_json(const census::VerdictWitness& w) {
  ordered_json j;
  if (w.covers)
    j = sum_witness_json(*w.covers);
  else if (w.subgroups)
    j = subgroup_witness_json(*w.subgroups);
  else if (w.bundles)
    j = bundle_witness_json(*w.bundles);
  else if (w.sol)
    j = sol_witness_json(*w.sol);
  else
    j = ordered_json{{"kind", "none"}};
  j["kind"] = w.kind;
  if (!w.note.empty()) j["note"] = w.note;
  if (w.covers) {
    // the inner pair that seeded a lifted sum witness, when there is one
    if (w.subgroups) j["summand_witness"] = subgroup_witness_json(*w.subgroups);
    if (w.bundles) j["summand_witness"] = bundle_witness_json(*w.bundles);
    if (w.sol) j["summand_witness"] = sol_witness_json(*w.sol);
  }
  return j;
}

ordered_json exceptionality_json(const census::ExceptionalityReport& rep) {
  ordered_json by_index = ordered_json::array();
  for (const census::IndexEntry& e : rep.by_index) {
    ordered_json classes = ordered_json::array();
    for (const census::IsoClassEntry& c : e.iso_classes)
      classes.push_back(ordered_json{{"fingerprint", c.fingerprint},
                                     {"count", c.count},
                                     {"cyclic", c.cyclic},
                                     {"all_conjugate", c.all_conjugate},
                                     {"subgroup_order", c.subgroup_order}});
    by_index.push_back(ordered_json{{"index", e.index}, {"classes", std::move(classes)}});
  }
  return ordered_json{{"verdict", census::verdict_name(rep.verdict)},
                      {"reason", rep.reason},
                      {"by_index", std::move(by_index)}};
}

struct App {
  CLI::App cli{"census of finite-index subgroups and finite covers"};
  std::string format = "json";
  std::function<Outcome()> run;

  // option storage shared across subcommands
  std::string path;
  std::string signature_text;
  std::string table_path;
  std::string kind_name;
  std::string descriptor;
  int n = 2;
  bool upto = false;
  bool classes = false;
  bool records = false;
  bool no_verify = false;
  bool nonorientable = false;
  std::uint64_t max_cells = 100000000;
  int group_cap = 2000;
  std::size_t subgroup_cap = 200000;
  int genus = 0;
  int boundary = 0;
  int witness_k = 0;
  long long euler = 0;
  long long degree = 2;
  std::vector<long long> lens_args;
  std::vector<long long> sol_entries;

  App();
  Outcome cmd_subgroups();
  Outcome cmd_count();
  Outcome cmd_fuchsian();
  Outcome cmd_spherical();
  Outcome cmd_lens();
  Outcome cmd_bundle();
  Outcome cmd_sol();
  Outcome cmd_crystal();
  Outcome cmd_verdict();
  Outcome cmd_surface();
};

App::App() {
  cli.require_subcommand(1);
  cli.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto bind = [this](CLI::App* sub, Outcome (App::*fn)()) {
    // Let global flags like --format trail the subcommand arguments.
    sub->fallthrough();
    sub->callback([this, fn] { run = [this, fn] { return (this->*fn)(); }; });
  };

  CLI::App* sub = cli.add_subcommand("subgroups", "index-n subgroups of a presentation");
  sub->add_option("file", path, "presentation file, or - for stdin")->required();
  sub->add_option("-n,--index", n, "subgroup index")->required()->check(CLI::PositiveNumber);
  sub->add_flag("--classes", classes, "group the tables into conjugacy classes");
  sub->add_flag("--records", records, "include Schreier generators and abelianizations");
  sub->add_option("--max-cells", max_cells, "table cell budget")->capture_default_str();
  bind(sub, &App::cmd_subgroups);

  sub = cli.add_subcommand("count", "subgroup counts of a presentation");
  sub->add_option("file", path, "presentation file, or - for stdin")->required();
  sub->add_option("-n,--index", n, "largest index")->required()->check(CLI::PositiveNumber);
  sub->add_flag("--upto", upto, "count every index from 1 to n");
  sub->add_option("--max-cells", max_cells, "table cell budget")->capture_default_str();
  bind(sub, &App::cmd_count);

  sub = cli.add_subcommand("fuchsian", "orbifold signature census");
  sub->add_option("-s,--signature", signature_text, "signature g,k;m1,m2,...")->required();
  sub->add_option("-n,--index", n, "cover degree for the signature census");
  sub->add_option("--table", table_path, "coset table JSON: compute the cover's signature");
  sub->add_flag("--presentation", records, "include the orbifold group presentation");
  sub->add_option("--max-cells", max_cells, "table cell budget")->capture_default_str();
  bind(sub, &App::cmd_fuchsian);

  sub = cli.add_subcommand("spherical", "exceptionality of a catalog group");
  sub->add_option("kind", kind_name, "catalog name, e.g. Q8n:2 or P48 or D:2,1xZ:3")
      ->required();
  sub->add_option("--max-order", group_cap, "coset enumeration cap")->capture_default_str();
  sub->add_option("--max-subgroups", subgroup_cap, "subgroup lattice cap")
      ->capture_default_str();
  bind(sub, &App::cmd_spherical);

  sub = cli.add_subcommand("lens", "lens space comparison");
  sub->add_option("pq", lens_args, "p q, or p q p' q' to compare two spaces")
      ->expected(2, 4);
  bind(sub, &App::cmd_lens);

  sub = cli.add_subcommand("bundle", "circle bundle cover homology");
  sub->add_option("-g,--genus", genus, "base genus")->required();
  sub->add_option("-e,--euler", euler, "Euler number")->required();
  sub->add_option("-d,--degree", degree, "preferred cover degree")->capture_default_str();
  bind(sub, &App::cmd_bundle);

  sub = cli.add_subcommand("sol", "torus bundle monodromy traces");
  sub->add_option("matrix", sol_entries, "monodromy entries a b c d")->expected(4);
  sub->add_option("-d,--degree", degree, "fiberwise cover degree")->capture_default_str();
  bind(sub, &App::cmd_sol);

  sub = cli.add_subcommand("crystal", "flat manifold cover pair");
  sub->add_option("file", path, "crystal group JSON file")->required();
  sub->add_flag("--no-verify", no_verify, "skip the coset enumeration cross-check");
  bind(sub, &App::cmd_crystal);

  sub = cli.add_subcommand("verdict", "exceptionality of a closed 3-manifold");
  sub->add_option("manifold", descriptor, "prime decomposition, e.g. 'L(5,1) # S1xS2'")
      ->required();
  sub->add_option("--group-cap", group_cap, "coset enumeration cap")->capture_default_str();
  sub->add_option("--subgroup-cap", subgroup_cap, "subgroup lattice cap")
      ->capture_default_str();
  bind(sub, &App::cmd_verdict);

  sub = cli.add_subcommand("surface", "surface exceptionality");
  sub->add_option("-g,--genus", genus, "genus (crosscaps if non-orientable)")->required();
  sub->add_option("-b,--boundary", boundary, "boundary circles")->capture_default_str();
  sub->add_flag("--nonorientable", nonorientable, "non-orientable surface");
  sub->add_option("-k,--witness", witness_k,
                  "also build the two-cover witness for a planar surface with k boundaries");
  bind(sub, &App::cmd_surface);
}

Outcome App::cmd_subgroups() {
  Outcome out;
  census::Presentation P = load_presentation(path);
  census::EnumerationOptions opt{max_cells};
  std::vector<census::CosetTable> tables = census::enumerate_subgroups(P, n, opt);

  out.inputs = {{"presentation", census::presentation_to_json(P)}, {"index", n}};
  ordered_json list = ordered_json::array();
  for (const census::CosetTable& t : tables) {
    ordered_json entry = ordered_json(census::table_to_json(t));
    entry["normal"] = census::is_normal(P, t);
    if (records) {
      census::SubgroupRecord rec = census::subgroup_record(P, t);
      entry["schreier_generators"] = words_json(rec.schreier_generators, P.generator_names);
      entry["h1"] = abelian_json(census::abelianization(rec.presentation));
    }
    list.push_back(std::move(entry));
  }
  out.results["count"] = tables.size();
  out.results["subgroups"] = std::move(list);
  std::size_t class_count = 0;
  if (classes) {
    std::vector<std::vector<std::size_t>> cc = census::conjugacy_classes(tables);
    class_count = cc.size();
    out.results["conjugacy_classes"] = cc;
  }
  out.summary = "index " + std::to_string(n) + ": " + std::to_string(tables.size()) +
                " subgroups" +
                (classes ? ", " + std::to_string(class_count) + " conjugacy classes" : "");
  return out;
}

Outcome App::cmd_count() {
  Outcome out;
  census::Presentation P = load_presentation(path);
  census::EnumerationOptions opt{max_cells};
  out.inputs = {{"presentation", census::presentation_to_json(P)},
                {"index", n},
                {"upto", upto}};
  ordered_json counts = ordered_json::array();
  std::string listing;
  for (int i = upto ? 1 : n; i <= n; ++i) {
    std::uint64_t c = census::count_subgroups(P, i, opt);
    counts.push_back(ordered_json{{"index", i}, {"count", c}});
    if (!listing.empty()) listing += ", ";
    listing += std::to_string(c);
  }
  out.results["counts"] = std::move(counts);
  out.summary = (upto ? "counts 1.." : "count at ") + std::to_string(n) + ": " + listing;
  return out;
}

Outcome App::cmd_fuchsian() {
  Outcome out;
  census::Signature sig = census::Signature::parse(signature_text);
  out.inputs = {{"signature", sig.str()}};
  census::Rational chi = census::orbifold_euler(sig);
  out.results["euler"] = census::rational_to_string(chi);
  out.summary = "signature " + sig.str() + ": euler " + census::rational_to_string(chi);
  if (records) {
    census::Presentation P = census::fuchsian_presentation(sig);
    out.results["presentation"] = census::presentation_to_json(P);
    out.results["presentation_text"] = census::format_presentation(P);
  }

  if (!table_path.empty()) {
    std::ifstream in(table_path);
    if (!in) throw std::invalid_argument("cannot open table file: " + table_path);
    nlohmann::json tj;
    in >> tj;
    census::CosetTable t = census::table_from_json(tj);
    census::Signature cover = census::subgroup_signature(sig, t);
    out.inputs["table"] = table_path;
    out.results["cover_signature"] = cover.str();
    out.results["cover_euler"] = census::rational_to_string(census::orbifold_euler(cover));
    out.summary += "; degree-" + std::to_string(t.degree) + " cover " + cover.str();
    return out;
  }

  if (cli.get_subcommand("fuchsian")->count("-n")) {
    census::EnumerationOptions opt{max_cells};
    out.inputs["index"] = n;
    std::uint64_t en = census::e_n_fuchsian(sig, n, opt);
    out.results["signature_classes"] = en;
    if (chi < 0) out.results["lattice_points"] = census::lattice_point_count(sig, n);
    out.summary += "; e_" + std::to_string(n) + " = " + std::to_string(en);
  }
  return out;
}

Outcome App::cmd_spherical() {
  Outcome out;
  census::SphericalKind kind = census::SphericalKind::parse(kind_name);
  census::FiniteGroup G = census::spherical_group(kind, group_cap);
  census::ExceptionalityReport rep = census::exceptionality_report(G, subgroup_cap);
  out.inputs = {{"kind", kind.name()}, {"order", G.order}};
  out.results = exceptionality_json(rep);
  if (rep.witness) out.witness = subgroup_witness_json(*rep.witness);
  out.summary = "sph:" + kind.name() + " (order " + std::to_string(G.order) +
                "): " + census::verdict_name(rep.verdict);
  return out;
}

Outcome App::cmd_lens() {
  Outcome out;
  if (lens_args.size() != 2 && lens_args.size() != 4)
    throw std::invalid_argument("lens needs p q or p q p' q'");
  census::LensSpace a(lens_args[0], lens_args[1]);
  out.inputs["first"] = a.str();
  if (lens_args.size() == 2) {
    out.results["unique_at_order"] = census::unique_lens_order(a.p);
    out.results["verdict"] = census::verdict_name(census::Verdict::Exceptional);
    out.results["reason"] =
        "cyclic fundamental group: one cover per degree dividing p, none otherwise";
    out.summary = a.str() + ": exceptional";
    return out;
  }
  census::LensSpace b(lens_args[2], lens_args[3]);
  out.inputs["second"] = b.str();
  bool same = a.p == b.p && census::lens_homeomorphic(a, b);
  out.results["homeomorphic"] = same;
  if (a.p != b.p) out.results["note"] = "different fundamental group orders";
  out.summary = a.str() + (same ? " ~ " : " !~ ") + b.str();
  return out;
}

Outcome App::cmd_bundle() {
  Outcome out;
  census::CircleBundle b{genus, euler};
  out.inputs = {{"genus", genus}, {"euler", euler}, {"degree", degree}};
  out.results["h1"] = abelian_json(census::h1_circle_bundle(b));
  census::CircleBundleWitness w = census::circle_bundle_witness(b, degree);
  if (w.has_witness) {
    out.witness = bundle_witness_json(w);
    out.results["verdict"] = census::verdict_name(census::Verdict::NotExceptional);
    out.summary = b.str() + ": covers " + w.cover_a.total.str() + " vs " +
                  w.cover_b.total.str() + " at degree " + std::to_string(w.degree);
  } else {
    out.results["verdict"] = census::verdict_name(census::Verdict::Exceptional);
    out.results["reason"] = w.reason;
    out.summary = b.str() + ": " + w.reason;
  }
  return out;
}

Outcome App::cmd_sol() {
  Outcome out;
  census::SolBundle s{sol_entries[0], sol_entries[1], sol_entries[2], sol_entries[3]};
  s.validate();
  out.inputs = {{"matrix", sol_entries}, {"degree", degree}};
  census::SolWitness w = census::sol_witness(s, degree);
  out.results["trace"] = w.base_trace.str();
  out.results["power_trace"] = w.power_trace.str();
  out.results["verdict"] = census::verdict_name(census::Verdict::NotExceptional);
  out.witness = sol_witness_json(w);
  out.summary = s.str() + ": tr(A) = " + w.base_trace.str() + ", tr(A^" +
                std::to_string(degree) + ") = " + w.power_trace.str();
  return out;
}

Outcome App::cmd_crystal() {
  Outcome out;
  census::CrystalGroup C = census::load_crystal_file(path);
  out.inputs = {{"file", path},
                {"dim", C.dim},
                {"point_group_order", C.point_group_order()}};
  if (census::is_free_abelian(C)) {
    out.results["free_abelian"] = true;
    out.results["verdict"] = census::verdict_name(census::Verdict::Exceptional);
    out.results["reason"] = "the group is a lattice of translations; every finite cover of "
                            "the torus is a torus";
    out.summary = "crystal dim " + std::to_string(C.dim) + ": free abelian (torus)";
    return out;
  }
  census::CrystalWitness w = census::euclidean_witness(C);
  const std::vector<std::string>& names = w.presentation.generator_names;
  out.results["free_abelian"] = false;
  out.results["verdict"] = census::verdict_name(census::Verdict::NotExceptional);
  out.results["index"] = w.index;
  out.results["prime"] = w.prime;
  out.results["presentation"] = census::presentation_to_json(w.presentation);
  ordered_json wit;
  wit["kind"] = "subgroup_pair";
  wit["index"] = w.index;
  wit["abelian_generators"] = words_json(w.abelian_generators, names);
  wit["nonabelian_generators"] = words_json(w.nonabelian_generators, names);
  wit["commutator_pair"] = ordered_json::array(
      {census::render_word(w.commutator_pair.first, names),
       census::render_word(w.commutator_pair.second, names)});
  if (!no_verify) {
    bool ok = census::verify_pair(C, w);
    wit["verified"] = ok;
    if (!ok) throw std::logic_error("witness pair failed its own verification");
  }
  out.witness = std::move(wit);
  out.summary = "crystal dim " + std::to_string(C.dim) + ": abelian and nonabelian covers of index " +
                std::to_string(w.index);
  return out;
}

Outcome App::cmd_verdict() {
  Outcome out;
  census::ManifoldDescriptor M = census::ManifoldDescriptor::parse(descriptor);
  census::VerdictOptions opt;
  opt.group_cap = group_cap;
  opt.subgroup_cap = subgroup_cap;
  census::VerdictReport rep = census::manifold_verdict(M, opt);
  out.inputs = {{"manifold", rep.manifold}};
  out.results["verdict"] = census::verdict_name(rep.verdict);
  out.results["reason"] = rep.reason;
  if (rep.witness) out.witness = verdict_witness_json(*rep.witness);
  out.summary = rep.manifold + ": " + census::verdict_name(rep.verdict);
  return out;
}

Outcome App::cmd_surface() {
  Outcome out;
  census::SurfaceType S{!nonorientable, genus, boundary};
  out.inputs = {{"surface", S.str()}};
  out.results["euler"] = S.euler();
  bool exc = census::surface_exceptional(S);
  out.results["verdict"] =
      census::verdict_name(exc ? census::Verdict::Exceptional : census::Verdict::NotExceptional);
  out.summary = S.str() + ": " + (exc ? "exceptional" : "not exceptional");
  if (witness_k > 0) {
    census::SurfaceWitness w = census::surface_cover_witness(witness_k);
    out.witness = ordered_json{{"kind", "boundary_counts"},
                               {"k", w.k},
                               {"phi_values", w.phi_values},
                               {"psi_values", w.psi_values},
                               {"phi_boundaries", w.phi_boundaries},
                               {"psi_boundaries", w.psi_boundaries},
                               {"phi_total", w.phi_total},
                               {"psi_total", w.psi_total}};
    out.summary += "; cyclic covers with " + std::to_string(w.phi_total) + " vs " +
                   std::to_string(w.psi_total) + " boundary circles";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  App app;
  try {
    app.cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.cli.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = app.run();
  } catch (const census::BudgetExceeded& e) {
    std::cerr << "census: " << e.what() << "\n";
    return 2;
  } catch (const census::CapExceeded& e) {
    std::cerr << "census: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "census: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  ordered_json report;
  report["command"] = app.cli.get_subcommands().front()->get_name();
  report["inputs"] = std::move(out.inputs);
  report["results"] = std::move(out.results);
  if (out.witness) report["witness"] = std::move(*out.witness);
  report["timing_ms"] = elapsed;
  report["version"] = COVERCENSUS_VERSION;

  if (app.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << out.summary << "\n" << report["results"].dump(2) << "\n";
  std::cerr << out.summary << "\n";
  return 0;
}
