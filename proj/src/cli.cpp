#include "gbx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gbx/combinat.hpp"
#include "gbx/io.hpp"

namespace gbx::cli {

namespace {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("bad JSON in '" + path + "': " + std::string(e.what()));
  }
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Output {
  std::ostream* stream = nullptr;
  std::string path;

  void emit(const nlohmann::json& doc) const {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      *stream << text;
    } else {
      std::ofstream f(path);
      if (!f) throw parse_error("cannot write '" + path + "'");
      f << text;
    }
  }
};

FieldTag resolve_field(const std::string& flag, const nlohmann::json* file) {
  std::optional<FieldTag> from_file;
  if (file != nullptr && file->contains("field"))
    from_file = FieldTag::parse(file->at("field").get<std::string>());
  if (!flag.empty()) {
    const FieldTag tag = FieldTag::parse(flag);
    if (from_file && from_file->canonical() != tag.canonical())
      throw parse_error("--field disagrees with the file's field tag");
    return tag;
  }
  if (from_file) return *from_file;
  throw parse_error("no field given (use --field or a 'field' entry in the file)");
}

template <class F>
void with_witness(const FieldTag& tag, F&& f) {
  std::visit([&](const auto& witness) { f(witness); }, make_witness(tag));
}

nlohmann::json family_json(const SetFamily& family) {
  return {{"N", family.ground}, {"sets", family.to_lists()}};
}

SetFamily family_from_json(const nlohmann::json& j) {
  if (!j.contains("N") || !j.contains("sets")) throw parse_error("family file needs 'N' and 'sets'");
  return SetFamily::from_lists(j.at("N").get<int>(),
                               j.at("sets").get<std::vector<std::vector<int>>>());
}

nlohmann::json monomial_json(const Monomial& m) {
  return {{"text", m.str()}, {"exp", m.exponents()}, {"degree", m.degree()}};
}

int run_from_gens(const Output& out, const std::string& file, const std::string& field_flag,
                  const std::string& order_name, int nvars, bool raw) {
  const std::string text = load_text_file(file);
  std::vector<std::string> lines;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(line);
  }
  if (lines.empty()) throw parse_error("no generators in '" + file + "'");
  if (nvars <= 0) {
    // infer the variable count from the largest index used
    for (const auto& line : lines)
      for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (line[i] == 'x' && std::isdigit(static_cast<unsigned char>(line[i + 1]))) {
          std::size_t j = i + 1;
          while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
          nvars = std::max(nvars, std::stoi(line.substr(i + 1, j - i - 1)));
        }
    if (nvars <= 0) throw parse_error("cannot infer the variable count; pass -n");
  }
  const FieldTag tag = resolve_field(field_flag.empty() ? "rational" : field_flag, nullptr);
  const TermOrder order = parse_order(order_name, nvars);
  with_witness(tag, [&](const auto& witness) {
    using K = std::decay_t<decltype(witness)>;
    std::vector<Polynomial<K>> gens;
    for (const auto& line : lines) gens.push_back(parse_polynomial(line, nvars, witness));
    const auto basis = buchberger(gens, order);
    out.emit(basis_json(raw ? basis : autoreduce(basis, VerifyInput::no), tag));
  });
  return 0;
}

int run_points(const Output& out, const std::string& file, const std::string& field_flag,
               const std::string& order_name, std::size_t max_points) {
  const nlohmann::json doc = load_json_file(file);
  const FieldTag tag = resolve_field(field_flag, &doc);
  const int nvars = doc.contains("n") ? doc.at("n").get<int>() : 0;
  if (nvars <= 0) throw parse_error("points file needs a positive 'n'");
  const TermOrder order = parse_order(order_name, nvars);
  with_witness(tag, [&](const auto& witness) {
    using K = std::decay_t<decltype(witness)>;
    PointSet<K> pts = point_set_from_json(doc, witness, max_points);
    std::sort(pts.points.begin(), pts.points.end(), point_less<K>);
    const auto basis = vanishing_basis(pts, order);
    nlohmann::json report = basis_json(basis, tag);
    report["points"] = pts.points.size();
    report["sm_count"] = standard_monomials(basis).monomials.size();
    out.emit(report);
  });
  return 0;
}

int run_roots_of_unity(const Output& out, int n, long long p, long long j,
                       const std::string& order_name, bool reduce_flag, std::size_t guard) {
  const TermOrder order = parse_order(order_name, n);
  const FieldTag tag{FieldTag::Kind::cyclotomic, p};
  const auto verbatim = basis_root_of_unity(n, p, j, order, guard);
  nlohmann::json report{{"claim", "closed-form basis of the vanishing ideal of B_j"},
                        {"p", p},
                        {"j", j},
                        {"reducedness_discrepancy", !is_reduced_basis(verbatim.polys, order)}};
  if (reduce_flag) {
    report["basis"] = basis_json(autoreduce(verbatim, VerifyInput::no), tag);
  } else {
    report["basis"] = basis_json(verbatim, tag);
  }
  out.emit(report);
  return 0;
}

int run_uniform(const Output& out, int n, int d, const std::string& field_flag,
                const std::string& order_name) {
  const FieldTag tag = resolve_field(field_flag.empty() ? "rational" : field_flag, nullptr);
  const TermOrder order = parse_order(order_name, n);
  with_witness(tag, [&](const auto& witness) {
    using K = std::decay_t<decltype(witness)>;
    const GroebnerBasis<K> basis = basis_uniform(n, d, witness, order);
    nlohmann::json report = basis_json(basis, tag);
    report["claim"] = "closed-form reduced basis of the d-uniform family ideal";
    report["d"] = d;
    report["sm_count"] = standard_monomials(basis).monomials.size();
    out.emit(report);
  });
  return 0;
}

int run_certify(const Output& out, const std::string& points_file, const std::string& h_file,
                const std::string& poly_file, const std::string& field_flag,
                const std::string& order_name, std::size_t max_points) {
  const nlohmann::json points_doc = load_json_file(points_file);
  const nlohmann::json h_doc = load_json_file(h_file);
  const FieldTag tag = resolve_field(field_flag, &points_doc);
  const int nvars = points_doc.at("n").get<int>();
  const TermOrder order = parse_order(order_name, nvars);
  int code = 0;
  with_witness(tag, [&](const auto& witness) {
    using K = std::decay_t<decltype(witness)>;
    PointSet<K> pts = point_set_from_json(points_doc, witness, max_points);
    std::sort(pts.points.begin(), pts.points.end(), point_less<K>);
    if (!h_doc.contains("point")) throw parse_error("witness file needs a 'point' entry");
    const std::vector<K> h = point_from_json(h_doc.at("point"), nvars, witness);
    const Polynomial<K> P = parse_polynomial(load_text_file(poly_file), nvars, witness);
    const auto basis = vanishing_basis(pts, order);
    try {
      const auto cert = certify_degree(P, basis, h, &pts.points);
      out.emit({{"certified", cert.alpha_y_nonzero},
                {"y", cert.y.str()},
                {"bound", cert.bound},
                {"alphaY", coefficient_text(cert.alpha_y)},
                {"alphaYNonzero", cert.alpha_y_nonzero},
                {"degP", cert.p_degree},
                {"degPReduced", cert.reduced_p_degree}});
      code = cert.alpha_y_nonzero ? 0 : 1;
    } catch (const certify_error& e) {
      out.emit({{"certified", false}, {"stage", e.stage}, {"detail", e.what()}});
      code = 1;
    }
  });
  return code;
}

int run_search_k(const Output& out, int n, long long p, int k_max, std::size_t guard) {
  const KSearchReport r = brute_force_K(n, p, k_max, guard);
  nlohmann::json report{{"claim", "K-lower-bound"},
                        {"n", r.nvars},
                        {"p", r.p},
                        {"kmax", r.k_max},
                        {"exhaustive", r.exhaustive},
                        {"lower_bound", r.lower_bound},
                        {"target", static_cast<long long>(r.nvars) * (r.p - 1)},
                        {"nodes", r.nodes},
                        {"symmetry", r.symmetry},
                        {"witness_coordinates", "exponents of w"}};
  report["optimum"] = r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json();
  report["witness"] = r.witness;
  out.emit(report);
  return 0;
}

int run_search_m(const Output& out, int n) {
  const MSearchReport r = brute_force_m(n);
  nlohmann::json report{{"claim", "exact Galvin m(n)"},
                        {"n", r.n},
                        {"exhaustive", r.exhaustive},
                        {"lower_bound", r.lower_bound},
                        {"upper_bound", 2 * r.n},
                        {"nodes", r.nodes}};
  report["optimum"] = r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json();
  report["witness"] = r.optimum ? family_json(r.witness) : nlohmann::json();
  out.emit(report);
  return 0;
}

int run_galvin_construct(const Output& out, int n) {
  out.emit(family_json(galvin_construction(n)));
  return 0;
}

int run_galvin_verify(const Output& out, const std::string& file, std::size_t guard) {
  const SetFamily family = family_from_json(load_json_file(file));
  if (family.ground % 4 != 0) throw parse_error("ground set size must be 4n");
  const int n = family.ground / 4;
  const bool valid = is_galvin_family(family, n, guard);
  out.emit({{"claim", "every 2n-subset meets a member in exactly n elements"},
            {"n", n},
            {"valid", valid},
            {"exhaustive", true},
            {"subsets_checked", static_cast<unsigned long long>(
                                    mpz_class(binomial(mpz_class(4 * n), 2 * n)).get_ui())}});
  return valid ? 0 : 1;
}

int run_galvin_certify(const Output& out, const std::string& file, long long p,
                       bool assume_valid) {
  const SetFamily family = family_from_json(load_json_file(file));
  const GalvinCertificate cert = galvin_lower_certificate(family, p, assume_valid);
  nlohmann::json report{{"claim", "m(p) lower bound via the uniform-family ideal"},
                        {"exhaustive", !cert.validity_assumed},
                        {"certified", cert.certified},
                        {"p", cert.p},
                        {"family_size", cert.family_size},
                        {"regime_warning", cert.regime_warning}};
  if (!cert.certified) {
    report["stage"] = cert.refused_stage;
  } else {
    report["bound"] = cert.bound;
    report["upper_bound"] = cert.upper_bound;
    report["witness_C"] = cert.witness_c;
    report["f_at_C"] = cert.f_at_c;
    report["y"] = monomial_json(*cert.y);
    report["validity_assumed"] = cert.validity_assumed;
    report["validity_checked"] = cert.validity_checked;
    report["vanishing_checked"] = cert.vanishing_checked;
  }
  out.emit(report);
  return cert.certified ? 0 : 1;
}

int run_check_counting(const Output& out, long long p) {
  const CountingReport r = counting_inequality(p);
  nlohmann::json report{{"claim", "4p C(2p,p) < C(4p,p) for p > 3"},
                        {"p", r.p},
                        {"lhs", r.lhs.get_str()},
                        {"rhs", r.rhs.get_str()},
                        {"holds", r.holds},
                        {"exhaustive", true},
                        {"ti_formula", r.ti_formula.get_str()}};
  report["ti_enumerated"] =
      r.ti_enumerated ? nlohmann::json(*r.ti_enumerated) : nlohmann::json();
  out.emit(report);
  return 0;
}

int run_check_ortho(const Output& out, int n, long long p, std::size_t guard) {
  const OrthoSweepReport r = orthogonal_class_sweep(n, p, guard);
  out.emit({{"claim", "orthogonal vectors pair classes B_i with B_{p-i}"},
            {"exhaustive", true},
            {"n", r.nvars},
            {"p", r.p},
            {"in_regime", r.in_regime},
            {"pairs", r.pairs},
            {"orthogonal_pairs", r.orthogonal_pairs},
            {"violations", r.violations}});
  return r.violations == 0 ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Groebner bases of finite point sets and combinatorial degree certificates"};
  app.fallthrough();
  app.require_subcommand(1);

  Output output{&out, ""};
  app.add_option("--out", output.path, "write the report to a file instead of stdout");
  std::size_t guard = kDefaultEnumerationGuard;
  app.add_option("--max-enum", guard, "enumeration guard for B and subset sweeps");
  std::size_t max_points = 4096;
  app.add_option("--max-points", max_points, "largest accepted point set");

  std::string field, order_name = "deglex", file, points_file, h_file, poly_file;
  int n = 0, d = 0, k_max = 0;
  long long p = 0, j = 0;
  bool reduce_flag = false, assume_valid = false;

  int exit_code = 0;
  const auto run = [&](auto&& fn) {
    return [&, fn]() { exit_code = fn(); };
  };

  // gb from-gens | points | roots-of-unity | uniform
  auto* from_gens = app.add_subcommand("from-gens", "reduced basis from generator polynomials")->fallthrough();
  from_gens->add_option("file", file, "text file, one polynomial per line")->required();
  from_gens->add_option("--field", field, "rational | f<p> | cyc<p>");
  from_gens->add_option("--order", order_name, "lex | deglex");
  from_gens->add_option("-n,--nvars", n, "variable count (inferred when omitted)");
  bool raw = false;
  from_gens->add_flag("--raw", raw, "emit the basis before autoreduction");
  from_gens->callback(
      run([&] { return run_from_gens(output, file, field, order_name, n, raw); }));

  auto* points = app.add_subcommand("points", "reduced basis of the vanishing ideal of a point set")->fallthrough();
  points->add_option("file", points_file, "points JSON")->required();
  points->add_option("--field", field, "rational | f<p> | cyc<p>");
  points->add_option("--order", order_name, "lex | deglex");
  points->callback(
      run([&] { return run_points(output, points_file, field, order_name, max_points); }));

  auto* roots = app.add_subcommand("roots-of-unity", "closed-form basis of I(B_j)")->fallthrough();
  roots->add_option("-n", n, "dimension")->required();
  roots->add_option("-p", p, "prime root order")->required();
  roots->add_option("-j", j, "product class index");
  roots->add_option("--order", order_name, "lex | deglex");
  roots->add_flag("--autoreduce", reduce_flag, "emit the reduced basis instead of the verbatim set");
  roots->callback(
      run([&] { return run_roots_of_unity(output, n, p, j, order_name, reduce_flag, guard); }));

  auto* uniform = app.add_subcommand("uniform", "closed-form basis for d-subsets of [n]")->fallthrough();
  uniform->add_option("-n", n, "ground set size")->required();
  uniform->add_option("-d", d, "subset size")->required();
  uniform->add_option("--field", field, "rational | f<p> | cyc<p>");
  uniform->add_option("--order", order_name, "lex | deglex");
  uniform->callback(run([&] { return run_uniform(output, n, d, field, order_name); }));

  auto* certify = app.add_subcommand("certify", "degree lower-bound certificate for a polynomial")->fallthrough();
  certify->set_help_flag("--help", "print help");  // frees -h for the witness-point option
  certify->add_option("--h", h_file, "witness point JSON")->required();
  certify->add_option("--points", points_file, "points JSON (the set F)")->required();
  certify->add_option("--poly", poly_file, "polynomial text file")->required();
  certify->add_option("--field", field, "rational | f<p> | cyc<p>");
  certify->add_option("--order", order_name, "lex | deglex");
  certify->callback(run([&] {
    return run_certify(output, points_file, h_file, poly_file, field, order_name, max_points);
  }));

  auto* search = app.add_subcommand("search", "exact extremal searches")->fallthrough();
  search->require_subcommand(1);
  auto* search_k = search->add_subcommand("k", "minimum balancing family over B")->fallthrough();
  search_k->add_option("-n", n, "dimension")->required();
  search_k->add_option("-p", p, "prime root order")->required();
  search_k->add_option("--kmax", k_max, "largest family size to try")->required();
  search_k->callback(run([&] { return run_search_k(output, n, p, k_max, std::min(guard, kDefaultSearchGuard)); }));
  auto* search_m = search->add_subcommand("m", "exact Galvin m(n)")->fallthrough();
  search_m->add_option("-n", n, "parameter n")->required();
  search_m->callback(run([&] { return run_search_m(output, n); }));

  auto* galvin = app.add_subcommand("galvin", "Galvin set families")->fallthrough();
  galvin->require_subcommand(1);
  auto* g_construct = galvin->add_subcommand("construct", "the 2n sliding intervals")->fallthrough();
  g_construct->add_option("-n", n, "parameter n")->required();
  g_construct->callback(run([&] { return run_galvin_construct(output, n); }));
  auto* g_verify = galvin->add_subcommand("verify", "exhaustive family validity check")->fallthrough();
  g_verify->add_option("file", file, "family JSON")->required();
  g_verify->callback(run([&] { return run_galvin_verify(output, file, guard); }));
  auto* g_certify = galvin->add_subcommand("certify", "family-size lower bound certificate")->fallthrough();
  g_certify->add_option("file", file, "family JSON")->required();
  g_certify->add_option("-p", p, "prime")->required();
  g_certify->add_flag("--assume-valid", assume_valid, "skip the exhaustive validity sweep");
  g_certify->callback(run([&] { return run_galvin_certify(output, file, p, assume_valid); }));

  auto* check = app.add_subcommand("check", "counting and orthogonality sweeps")->fallthrough();
  check->require_subcommand(1);
  auto* c_counting = check->add_subcommand("counting", "4p C(2p,p) vs C(4p,p)")->fallthrough();
  c_counting->add_option("-p", p, "prime")->required();
  c_counting->callback(run([&] { return run_check_counting(output, p); }));
  auto* c_ortho = check->add_subcommand("ortho", "orthogonality class sweep over B x B")->fallthrough();
  c_ortho->add_option("-n", n, "dimension")->required();
  c_ortho->add_option("-p", p, "prime root order")->required();
  c_ortho->callback(run([&] { return run_check_ortho(output, n, p, guard); }));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gb");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const certify_error& e) {
    err << "certificate refused: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace gbx::cli
