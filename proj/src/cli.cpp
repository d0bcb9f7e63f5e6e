#include "malcev/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "malcev/catalog.hpp"
#include "malcev/delta.hpp"
#include "malcev/document.hpp"
#include "malcev/errors.hpp"
#include "malcev/fuzz.hpp"
#include "malcev/ideals.hpp"
#include "malcev/weights.hpp"

namespace malcev {

namespace {

using json = nlohmann::ordered_json;

// Text mode renders the same report object the json mode dumps, so the two
// formats cannot drift apart.
bool inlineable(const json& v) {
  if (v.is_object()) return v.empty();
  if (v.is_array()) {
    for (const auto& e : v)
      if (!inlineable(e)) return false;
    return true;
  }
  return true;
}

std::string inline_repr(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (const auto& e : v) {
      if (s.size() > 1) s += ", ";
      s += inline_repr(e);
    }
    return s + "]";
  }
  if (v.is_object()) return "{}";
  return v.dump();
}

void render_tree(std::ostream& out, const json& v, const std::string& pad) {
  for (const auto& [key, val] : v.items()) {
    if (inlineable(val)) {
      out << pad << key << ": " << inline_repr(val) << "\n";
    } else if (val.is_object()) {
      out << pad << key << ":\n";
      render_tree(out, val, pad + "  ");
    } else {
      out << pad << key << ":\n";
      for (const auto& item : val) {
        if (inlineable(item)) {
          out << pad << "  - " << inline_repr(item) << "\n";
        } else {
          out << pad << "  -\n";
          render_tree(out, item, pad + "    ");
        }
      }
    }
  }
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

json subspace_json(const Subspace& s) {
  json o;
  o["dim"] = s.dim();
  json basis = json::array();
  for (const auto& row : s.basis()) basis.push_back(vec_json(row));
  o["basis"] = basis;
  return o;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json witness_json(const Witness& w) {
  json o;
  o["indices"] = w.indices;
  o["residual"] = vec_json(w.residual);
  return o;
}

Algebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

Vec parse_coords(const std::string& csv, const Algebra& a) {
  Vec coords;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) coords.push_back(parse_rational(token));
  if (coords.size() != a.dim())
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(a.dim()) +
                                             " comma-separated coordinates, got " +
                                             std::to_string(coords.size()));
  return coords;
}

json report_header(const std::string& command, const Algebra& a) {
  json r;
  r["command"] = command;
  r["algebra"] = a.name();
  r["dim"] = a.dim();
  return r;
}

json cmd_validate(const std::string& file, std::vector<std::string>& findings) {
  const Algebra a = load_algebra(file);
  const ValidationReport v = validate(a);
  json r = report_header("validate", a);
  r["anticommutative"] = v.anticommutative;
  r["is_lie"] = v.is_lie;
  r["is_malcev"] = v.is_malcev;
  r["jacobi_failures"] = v.lie_failures;
  json jw = json::array();
  for (const Witness& w : v.lie_witnesses) jw.push_back(witness_json(w));
  r["jacobi_witnesses"] = jw;
  r["identity_failures"] = v.malcev_failures;
  json mw = json::array();
  for (const Witness& w : v.malcev_witnesses) mw.push_back(witness_json(w));
  r["identity_witnesses"] = mw;
  if (v.is_lie && !v.is_malcev)
    findings.push_back("Jacobi holds but the linearized identity fails");
  return r;
}

json cmd_analyze(const std::string& file, std::vector<std::string>& findings) {
  const Algebra a = load_algebra(file);
  const ValidationReport v = validate(a);
  const Decomposition d = decompose(a);
  json r = report_header("analyze", a);
  r["is_malcev"] = v.is_malcev;
  r["is_lie"] = v.is_lie;

  json jj = subspace_json(d.j);
  const bool j_ok = is_ideal(a, d.j);
  jj["is_ideal"] = j_ok;
  r["jacobian_span"] = jj;
  json nn = subspace_json(d.n);
  const bool n_ok = is_ideal(a, d.n);
  nn["is_ideal"] = n_ok;
  r["nucleus"] = nn;

  const bool nj_zero = check_annihilation(a);
  r["nucleus_annihilates_jacobian_span"] = nj_zero;
  r["direct"] = d.direct;

  json q;
  q["name"] = d.quotient.name();
  q["dim"] = d.quotient.dim();
  q["is_lie"] = d.quotient_is_lie;
  r["quotient"] = q;
  r["epimorphism"] = matrix_json(d.phi);
  if (d.pi.has_value()) r["projection"] = matrix_json(*d.pi);

  std::size_t checked = 0;
  bool all_hold = true;
  for (const IdealHandle& h : enumerate_ideals(a, 2)) {
    ++checked;
    if (!j_minimality_check(a, h).holds) {
      all_hold = false;
      findings.push_back("minimality fails on an enumerated ideal of dim " +
                         std::to_string(h.space.dim()));
    }
  }
  json m;
  m["ideals_checked"] = checked;
  m["all_hold"] = all_hold;
  r["minimality"] = m;

  if (!j_ok) findings.push_back("the Jacobian span is not an ideal");
  if (!n_ok) findings.push_back("the nucleus is not an ideal");
  if (!nj_zero) findings.push_back("the nucleus fails to annihilate the Jacobian span");
  if (!d.quotient_is_lie) findings.push_back("the residue-class algebra fails Jacobi");
  return r;
}

json cmd_ideals(const std::string& file, std::size_t max_seed_size,
                std::vector<std::string>& findings) {
  const Algebra a = load_algebra(file);
  const Decomposition d = decompose(a);
  json r = report_header("ideals", a);
  r["max_seed_size"] = max_seed_size;
  r["direct"] = d.direct;

  const std::vector<IdealHandle> ideals = enumerate_ideals(a, max_seed_size);
  json list = json::array();
  for (const IdealHandle& h : ideals) {
    json o = subspace_json(h.space);
    o["contains_jacobian_span"] = h.contains_j;
    const bool minimal_ok = j_minimality_check(a, h).holds;
    o["minimality_holds"] = minimal_ok;
    if (!minimal_ok)
      findings.push_back("minimality fails on an enumerated ideal of dim " +
                         std::to_string(h.space.dim()));
    if (d.direct) {
      const CorrespondenceResult c = correspondence_check(d, h.space);
      json cc;
      cc["forward"] = c.forward;
      cc["backward"] = c.backward;
      o["correspondence"] = cc;
      if (!c.forward || !c.backward)
        findings.push_back("ideal correspondence fails for an ideal of dim " +
                           std::to_string(h.space.dim()));
    }
    list.push_back(std::move(o));
  }
  r["ideals"] = list;

  std::size_t j_pairs = 0;
  bool j_pairs_ok = true;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t k = i; k < ideals.size(); ++k) {
      if (!ideals[i].contains_j || !ideals[k].contains_j) continue;
      ++j_pairs;
      if (!is_ideal(a, ideal_product(ideals[i], ideals[k]))) {
        j_pairs_ok = false;
        findings.push_back(
            "a product of two ideals containing the Jacobian span is not an ideal");
      }
    }
  json jp;
  jp["pairs"] = j_pairs;
  jp["all_products_are_ideals"] = j_pairs_ok;
  r["jacobian_containing_products"] = jp;

  const auto cex = product_counterexample_search(a, max_seed_size);
  if (cex.has_value()) {
    json o;
    o["left"] = subspace_json(cex->p.space);
    o["right"] = subspace_json(cex->q.space);
    o["product"] = subspace_json(cex->product);
    r["product_counterexample"] = o;
    findings.push_back("found an ideal pair whose product is not an ideal");
  } else {
    r["product_counterexample"] = nullptr;
  }

  if (d.direct) {
    const std::vector<Subspace> nucleus_ideals =
        enumerate_nucleus_ideals(d, max_seed_size);
    json nlist = json::array();
    for (const Subspace& s : nucleus_ideals) nlist.push_back(subspace_json(s));
    r["nucleus_ideals"] = nlist;

    std::size_t coprime_pairs = 0;
    bool coprime_ok = true;
    for (std::size_t i = 0; i < nucleus_ideals.size(); ++i)
      for (std::size_t k = i; k < nucleus_ideals.size(); ++k) {
        const CoprimeResult c =
            coprime_product_check(d, nucleus_ideals[i], nucleus_ideals[k]);
        if (!c.coprime) continue;
        ++coprime_pairs;
        if (!c.product_is_nucleus_ideal) {
          coprime_ok = false;
          findings.push_back(
              "a co-prime pair's product is not stable under the projected action");
        }
      }
    json cp;
    cp["coprime_pairs"] = coprime_pairs;
    cp["all_products_pass"] = coprime_ok;
    r["coprime_products"] = cp;
  }
  return r;
}

json cmd_delta(const std::string& file, const std::string& x_csv,
               const std::string& y_csv, std::vector<std::string>& findings) {
  const Algebra a = load_algebra(file);
  const Element x = a.element(parse_coords(x_csv, a));
  const Element y = a.element(parse_coords(y_csv, a));
  const DeltaSolution s = delta_element(a, x, y);
  json r = report_header("delta", a);
  r["x"] = vec_json(x.coords());
  r["y"] = vec_json(y.coords());
  r["status"] = delta_status_name(s.status);
  if (s.particular.has_value()) {
    r["particular"] = vec_json(s.particular->coords());
    bool verified = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!(bracket(a.basis_element(i), *s.particular) ==
            jacobian(a.basis_element(i), x, y)))
        verified = false;
    r["back_substitution"] = verified;
    if (!verified) findings.push_back("a reported solution fails back-substitution");
  }
  r["kernel"] = subspace_json(s.kernel);
  r["operator"] = matrix_json(delta_operator(a, x, y));

  const Subspace span = delta_span(a);
  const bool closed = lie_closure_check(span);
  json sp;
  sp["dim"] = span.dim();
  sp["closed_under_commutator"] = closed;
  r["span"] = sp;
  if (!closed) findings.push_back("the operator span is not closed under the commutator");
  return r;
}

json cmd_weights(const std::string& file, const std::string& labels_csv,
                 std::vector<std::string>& findings) {
  const Algebra a = load_algebra(file);
  const Decomposition d = decompose(a);

  std::vector<std::string> labels;
  std::stringstream stream(labels_csv);
  std::string token;
  while (std::getline(stream, token, ',')) labels.push_back(token);
  std::vector<Vec> gens;
  for (const std::string& label : labels) {
    const auto idx = a.index_of(label);
    if (!idx.has_value()) throw Error(Errc::UnknownBasisLabel, "\"" + label + "\"");
    gens.push_back(unit_vec(a.dim(), *idx));
  }
  const Subspace h = Subspace::span(gens, a.dim());

  const WeightDecomposition w = weight_decomposition(d, h);
  json r = report_header("weights", a);
  r["h_labels"] = labels;
  r["h"] = subspace_json(h);
  json spaces = json::array();
  for (const WeightSpace& ws : w.spaces) {
    json o;
    o["weight"] = vec_json(ws.weight.values);
    o["space"] = subspace_json(ws.space);
    spaces.push_back(std::move(o));
  }
  r["weight_spaces"] = spaces;
  r["all_split"] = w.all_split;
  r["complete"] = w.complete;
  r["h_in_zero_space"] = w.h_in_zero;
  r["graded"] = w.graded;
  if (!w.h_in_zero)
    findings.push_back("the acting subalgebra escapes its zero weight space");
  if (!w.graded)
    findings.push_back("a weight-space product lands outside the weight-sum space");
  if (w.all_split && !w.complete)
    findings.push_back("split spectra but the weight spaces do not fill the nucleus");

  const LiftReport lift = lift_weight_spaces(d, w, h);
  json lo;
  json literal;
  literal["direct"] = lift.literal_direct;
  literal["total_dim"] = lift.literal_total_dim;
  lo["literal"] = literal;
  json extended;
  extended["direct"] = lift.extended_direct;
  extended["total_dim"] = lift.extended_total_dim;
  lo["extended"] = extended;
  r["lift"] = lo;
  if (w.complete && !lift.extended_direct)
    findings.push_back("complete weight spaces fail to lift to a direct decomposition");
  return r;
}

json cmd_catalog_list() {
  json r;
  r["command"] = "catalog list";
  json entries = json::array();
  for (const Algebra& a : catalog()) {
    const ValidationReport v = validate(a);
    json o;
    o["name"] = a.name();
    o["dim"] = a.dim();
    o["is_lie"] = v.is_lie;
    entries.push_back(std::move(o));
  }
  r["entries"] = entries;
  return r;
}

json cmd_catalog_show(const std::string& name) {
  const Algebra& a = catalog_algebra(name);
  const ValidationReport v = validate(a);
  json r = report_header("catalog show", a);
  r["is_lie"] = v.is_lie;
  r["is_malcev"] = v.is_malcev;
  r["document"] = json::parse(serialize_algebra(a));
  return r;
}

json cmd_fuzz(const FuzzConfig& cfg, std::vector<std::string>& findings) {
  const FuzzReport rep = run_fuzz(cfg);
  json r;
  r["command"] = "fuzz";
  r["dim"] = cfg.dim;
  r["coefficient_bound"] = cfg.bound;
  r["seed"] = cfg.seed;
  r["trials"] = rep.trials_run;
  r["target"] = fuzz_target_name(cfg.target);
  r["identity_hits"] = rep.identity_hits;

  json written = json::array();
  if (!rep.findings.empty()) std::filesystem::create_directories("findings");
  for (const FuzzFinding& f : rep.findings) {
    const std::string path = "findings/" + f.name + ".json";
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::ParseError, "cannot write " + path);
    file << f.document;
    json o;
    o["trial"] = f.trial;
    o["detail"] = f.detail;
    o["document"] = path;
    written.push_back(std::move(o));
    findings.push_back("trial " + std::to_string(f.trial) + ": " + f.detail);
  }
  r["findings_written"] = written;
  return r;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for anticommutative structure-constant algebras",
               "malcev"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string validate_file;
  CLI::App* sub_validate = app.add_subcommand(
      "validate", "check anticommutativity, Jacobi and the linearized identity");
  sub_validate->fallthrough();
  sub_validate->add_option("FILE", validate_file, "algebra document")->required();

  std::string analyze_file;
  CLI::App* sub_analyze = app.add_subcommand(
      "analyze", "Jacobian span, nucleus, quotient and complementarity");
  sub_analyze->fallthrough();
  sub_analyze->add_option("FILE", analyze_file, "algebra document")->required();

  std::string ideals_file;
  std::size_t max_seed_size = 2;
  CLI::App* sub_ideals = app.add_subcommand(
      "ideals", "enumerate ideals, correspondence, products and co-primality");
  sub_ideals->fallthrough();
  sub_ideals->add_option("FILE", ideals_file, "algebra document")->required();
  sub_ideals->add_option("--max-seed-size", max_seed_size,
                         "largest basis-subset seed, default 2");

  std::string delta_file, delta_x, delta_y;
  CLI::App* sub_delta =
      app.add_subcommand("delta", "solve [z, d] = J(z, x, y) and report the operator");
  sub_delta->fallthrough();
  sub_delta->add_option("FILE", delta_file, "algebra document")->required();
  sub_delta->add_option("--x", delta_x, "coordinates of x, comma-separated rationals")
      ->required();
  sub_delta->add_option("--y", delta_y, "coordinates of y, comma-separated rationals")
      ->required();

  std::string weights_file, weights_h;
  CLI::App* sub_weights = app.add_subcommand(
      "weights", "generalized weight decomposition of the nucleus and its lift");
  sub_weights->fallthrough();
  // --h would clash with the default short help flag.
  sub_weights->set_help_flag("--help", "print help");
  sub_weights->add_option("FILE", weights_file, "algebra document")->required();
  sub_weights
      ->add_option("--h", weights_h, "basis labels spanning the acting subalgebra")
      ->required();

  CLI::App* sub_catalog = app.add_subcommand("catalog", "built-in example algebras");
  sub_catalog->fallthrough();
  sub_catalog->require_subcommand(1);
  CLI::App* cat_list = sub_catalog->add_subcommand("list", "names and dimensions");
  cat_list->fallthrough();
  std::string show_name;
  CLI::App* cat_show =
      sub_catalog->add_subcommand("show", "one entry with its canonical document");
  cat_show->fallthrough();
  cat_show->add_option("NAME", show_name, "catalog entry")->required();
  std::string export_name;
  CLI::App* cat_export =
      sub_catalog->add_subcommand("export", "print the canonical document alone");
  cat_export->fallthrough();
  cat_export->add_option("NAME", export_name, "catalog entry")->required();

  FuzzConfig fuzz_cfg;
  std::string fuzz_target = fuzz_target_name(fuzz_cfg.target);
  CLI::App* sub_fuzz =
      app.add_subcommand("fuzz", "random search for counterexample algebras");
  sub_fuzz->fallthrough();
  sub_fuzz->add_option("--dim", fuzz_cfg.dim, "algebra dimension, default 4");
  sub_fuzz->add_option("--trials", fuzz_cfg.trials, "number of samples, default 100");
  sub_fuzz->add_option("--seed", fuzz_cfg.seed, "generator seed, default 0");
  sub_fuzz->add_option("--target", fuzz_target, "property to hunt for")
      ->check(CLI::IsMember({"non-lie-malcev", "ideal-product-failure",
                             "non-direct-decomposition"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::vector<std::string> findings;
  json report;
  try {
    if (sub_validate->parsed()) {
      report = cmd_validate(validate_file, findings);
    } else if (sub_analyze->parsed()) {
      report = cmd_analyze(analyze_file, findings);
    } else if (sub_ideals->parsed()) {
      report = cmd_ideals(ideals_file, max_seed_size, findings);
    } else if (sub_delta->parsed()) {
      report = cmd_delta(delta_file, delta_x, delta_y, findings);
    } else if (sub_weights->parsed()) {
      report = cmd_weights(weights_file, weights_h, findings);
    } else if (cat_list->parsed()) {
      report = cmd_catalog_list();
    } else if (cat_show->parsed()) {
      report = cmd_catalog_show(show_name);
    } else if (cat_export->parsed()) {
      out << serialize_algebra(catalog_algebra(export_name));
      return 0;
    } else if (sub_fuzz->parsed()) {
      fuzz_cfg.target = *fuzz_target_from(fuzz_target);
      report = cmd_fuzz(fuzz_cfg, findings);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }

  report["findings"] = findings;
  const int code = findings.empty() ? 0 : 1;
  report["exit"] = code;
  if (format == "json")
    out << report.dump(2) << "\n";
  else
    render_tree(out, report, "");
  return code;
}

}  // namespace malcev
