#include "corrideal/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "corrideal/errors.hpp"
#include "corrideal/instance_checks.hpp"
#include "corrideal/io.hpp"
#include "corrideal/structure.hpp"

namespace corrideal {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "cannot read '" + path + "'");
  return buf.str();
}

ordered_json set_json(const block_algebra& a, ideal_set s) {
  ordered_json out = ordered_json::array();
  for (unsigned i = 0; i < a.size(); ++i)
    if (s.contains(i)) out.push_back(a.label(i));
  return out;
}

ordered_json pair_json(const block_algebra& a, const ideal_pair& p) {
  return {{"first", set_json(a, p.first)}, {"second", set_json(a, p.second)}};
}

std::string pair_text(const block_algebra& a, const ideal_pair& p) {
  return "(" + a.render(p.first) + "; " + a.render(p.second) + ")";
}

std::string tower_text(const block_algebra& a,
                       const std::vector<ideal_set>& tower) {
  std::string out;
  for (std::size_t k = 0; k < tower.size(); ++k) {
    if (k) out += ' ';
    out += a.render(tower[k]);
  }
  return out;
}

ordered_json tower_json(const block_algebra& a,
                        const std::vector<ideal_set>& tower) {
  ordered_json out = ordered_json::array();
  for (ideal_set s : tower) out.push_back(set_json(a, s));
  return out;
}

void emit_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << '\n';
}

int do_validate(const correspondence& x, const std::string& format,
                std::ostream& out) {
  if (format == "json")
    emit_json(out, ordered_json{{"ok", true}, {"blocks", x.size()}});
  else
    out << "ok: " << x.size() << " blocks\n";
  return 0;
}

int do_info(const correspondence& x, const std::string& format,
            std::ostream& out) {
  const auto& a = x.algebra();
  structural_ideal_set s = structural_ideals(x);
  bimodule_check bm = is_hilbert_bimodule(x);

  if (format == "json") {
    ordered_json doc;
    doc["blocks"] = ordered_json::array();
    for (const block& b : a.blocks())
      doc["blocks"].push_back({{"label", b.label}, {"dim", b.dim}});
    doc["fullness"] = ordered_json::object();
    for (unsigned j = 0; j < x.size(); ++j)
      if (x.fullness(j).is_infinite())
        doc["fullness"][a.label(j)] = "inf";
      else
        doc["fullness"][a.label(j)] = x.fullness(j).value();
    doc["kernel"] = set_json(a, s.kernel);
    doc["compactly_acting"] = set_json(a, s.compactly_acting);
    doc["covariance_ideal"] = set_json(a, s.covariance);
    doc["hilbert_bimodule"] = bm.is_bimodule;
    emit_json(out, doc);
    return 0;
  }

  out << "blocks:";
  for (const block& b : a.blocks()) out << ' ' << b.label << '(' << b.dim << ')';
  out << '\n';
  out << "fullness:";
  for (unsigned j = 0; j < x.size(); ++j)
    out << ' ' << a.label(j) << '=' << x.fullness(j).to_string();
  out << '\n';
  out << "kernel: " << a.render(s.kernel) << '\n';
  out << "compactly acting: " << a.render(s.compactly_acting) << '\n';
  out << "covariance ideal: " << a.render(s.covariance) << '\n';
  out << "hilbert bimodule: " << (bm.is_bimodule ? "yes" : "no") << '\n';
  return 0;
}

int do_ideal(const correspondence& x, ideal_set i, const std::string& format,
             std::ostream& out) {
  const auto& a = x.algebra();
  ideal_set fwd = forward_image(x, i);
  ideal_set inv = inverse_image(x, i);
  ideal_set rel = relative_covariance_ideal(x, i);
  invariance_report ir = invariance(x, i);
  closure_report cr = closures(x, i);

  if (format == "json") {
    ordered_json doc;
    doc["ideal"] = set_json(a, i);
    doc["forward_image"] = set_json(a, fwd);
    doc["inverse_image"] = set_json(a, inv);
    doc["relative_covariance_ideal"] = set_json(a, rel);
    doc["positively_invariant"] = ir.positively_invariant;
    doc["negatively_invariant"] = ir.negatively_invariant;
    doc["invariant"] = ir.invariant();
    doc["forward_tower"] = tower_json(a, cr.forward_tower);
    doc["backward_tower"] = tower_json(a, cr.backward_tower);
    doc["positive_closure"] = set_json(a, cr.positive_closure);
    doc["negative_closure"] = set_json(a, cr.negative_closure);
    doc["invariant_closure"] = set_json(a, cr.invariant_closure);
    emit_json(out, doc);
    return 0;
  }

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "ideal: " << a.render(i) << '\n';
  out << "forward image: " << a.render(fwd) << '\n';
  out << "inverse image: " << a.render(inv) << '\n';
  out << "relative covariance ideal: " << a.render(rel) << '\n';
  out << "positively invariant: " << yn(ir.positively_invariant) << '\n';
  out << "negatively invariant: " << yn(ir.negatively_invariant) << '\n';
  out << "invariant: " << yn(ir.invariant()) << '\n';
  out << "forward tower: " << tower_text(a, cr.forward_tower) << '\n';
  out << "backward tower: " << tower_text(a, cr.backward_tower) << '\n';
  out << "positive closure: " << a.render(cr.positive_closure) << '\n';
  out << "negative closure: " << a.render(cr.negative_closure) << '\n';
  out << "invariant closure: " << a.render(cr.invariant_closure) << '\n';
  return 0;
}

int do_pairs(const correspondence& x, pair_kind kind, unsigned limit,
             const std::string& format, std::ostream& out) {
  const auto& a = x.algebra();
  pair_lattice lattice = enumerate_pairs(x, kind, limit);

  if (format == "json") {
    ordered_json doc;
    doc["kind"] = kind == pair_kind::O ? "O" : "T";
    doc["pairs"] = ordered_json::array();
    for (const ideal_pair& p : lattice.pairs())
      doc["pairs"].push_back(pair_json(a, p));
    doc["covers"] = ordered_json::array();
    for (auto [lo, hi] : lattice.covers())
      doc["covers"].push_back({lo, hi});
    emit_json(out, doc);
    return 0;
  }

  if (format == "dot") {
    out << "digraph pairs {\n";
    for (std::size_t k = 0; k < lattice.size(); ++k)
      out << "  p" << k << " [label=\"(" << a.render(lattice.pairs()[k].first)
          << ";" << a.render(lattice.pairs()[k].second) << ")\"];\n";
    for (auto [lo, hi] : lattice.covers())
      out << "  p" << lo << " -> p" << hi << ";\n";
    out << "}\n";
    return 0;
  }

  for (const ideal_pair& p : lattice.pairs()) out << pair_text(a, p) << '\n';
  return 0;
}

int do_structure(const correspondence& x, const std::string& format,
                 std::ostream& out) {
  const auto& a = x.algebra();
  matrix_block_structure s = ox_structure(x);

  if (format == "json") {
    ordered_json doc;
    doc["summands"] = ordered_json::array();
    for (const auto& m : s.summands)
      doc["summands"].push_back(
          {{"block", a.label(m.block)}, {"size", m.size}});
    emit_json(out, doc);
    return 0;
  }

  if (s.summands.empty()) {
    out << "0\n";
    return 0;
  }
  for (std::size_t k = 0; k < s.summands.size(); ++k) {
    if (k) out << " (+) ";
    out << 'M' << s.summands[k].size;
  }
  out << '\n';
  return 0;
}

int do_relcp(const correspondence& x, ideal_set j, const std::string& format,
             std::ostream& out) {
  const auto& a = x.algebra();
  relcp_report r = relcp_analyze(x, j);

  if (format == "json") {
    ordered_json doc;
    doc["tower"] = tower_json(a, r.tower);
    doc["limit"] = set_json(a, r.limit);
    doc["omega"] = pair_json(a, r.omega);
    doc["kernel_of_pi"] = set_json(a, r.kernel_of_pi);
    doc["algebra_is_zero"] = r.algebra_is_zero;
    emit_json(out, doc);
    return 0;
  }

  out << "tower: " << tower_text(a, r.tower) << '\n';
  out << "limit: " << a.render(r.limit) << '\n';
  out << "omega: " << pair_text(a, r.omega) << '\n';
  out << "kernel of pi: " << a.render(r.kernel_of_pi) << '\n';
  out << "algebra is zero: " << (r.algebra_is_zero ? "yes" : "no") << '\n';
  return 0;
}

int do_check(const correspondence& x, unsigned limit, std::ostream& out) {
  std::vector<check_result> results = run_instance_checks(x, limit);
  std::size_t failed = 0;
  for (const check_result& r : results) {
    if (r.skipped)
      out << "skipped " << r.name << ": " << r.detail << '\n';
    else if (r.pass)
      out << "ok " << r.name << '\n';
    else {
      out << "FAIL " << r.name << ": " << r.detail << '\n';
      ++failed;
    }
  }
  if (failed == 0) {
    out << "all checks passed\n";
    return 0;
  }
  out << failed << " check(s) failed\n";
  return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact ideal-lattice calculator for C*-correspondences over "
               "multi-matrix algebras"};
  app.require_subcommand(1);

  std::string file, set_csv, ideal_csv, kind = "o", format = "table";
  std::string quotient_csv, restrict_csv, omega_spec;
  bool nondegenerate = false;
  unsigned pairs_limit = default_enumeration_limit;
  unsigned check_limit = 10;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", file, "input document (JSON)")->required();
  };
  auto add_format = [&](CLI::App* cmd, bool with_dot = false) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(with_dot
                                  ? std::vector<std::string>{"json", "table",
                                                             "dot"}
                                  : std::vector<std::string>{"json", "table"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "validate an input document");
  add_input(validate);
  add_format(validate);

  CLI::App* info = app.add_subcommand("info", "structural ideals and bimodule flag");
  add_input(info);
  add_format(info);

  CLI::App* ideal = app.add_subcommand("ideal", "images, invariance and closures of an ideal");
  add_input(ideal);
  ideal->add_option("--set", set_csv, "ideal as comma-separated labels")
      ->required();
  add_format(ideal);

  CLI::App* pairs = app.add_subcommand("pairs", "enumerate T-pairs or O-pairs");
  add_input(pairs);
  pairs->add_option("--kind", kind, "pair kind")
      ->check(CLI::IsMember(std::vector<std::string>{"t", "o"}))
      ->required();
  pairs->add_option("--limit", pairs_limit, "enumeration block limit");
  add_format(pairs, true);

  CLI::App* construct = app.add_subcommand("construct", "derive a correspondence");
  add_input(construct);
  auto* q = construct->add_option("--quotient", quotient_csv,
                                  "quotient by a positively invariant ideal");
  auto* r = construct->add_option("--restrict", restrict_csv,
                                  "restrict to a positively invariant ideal");
  auto* w = construct->add_option("--omega", omega_spec,
                                  "pullback for a T-pair, written I:I'");
  auto* nd = construct->add_flag("--nondegenerate", nondegenerate,
                                 "nondegenerate replacement");
  q->excludes(r)->excludes(w)->excludes(nd);
  r->excludes(w)->excludes(nd);
  w->excludes(nd);

  CLI::App* structure = app.add_subcommand("structure", "matrix-block structure of the algebra");
  add_input(structure);
  add_format(structure);

  CLI::App* relcp = app.add_subcommand("relcp", "relative algebra tower analysis");
  add_input(relcp);
  relcp->add_option("--ideal", ideal_csv, "relative ideal as comma-separated labels")
      ->required();
  add_format(relcp);

  CLI::App* check = app.add_subcommand("check", "run the instance-level invariant suite");
  add_input(check);
  check->add_option("--limit", check_limit, "block limit for the suite");

  std::vector<const char*> argv{"corrideal"};
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }

  if (construct->parsed() && !q->count() && !r->count() && !w->count() &&
      !nondegenerate) {
    err << "error: construct needs one of --quotient, --restrict, --omega, "
           "--nondegenerate\n";
    return 3;
  }

  try {
    correspondence x = parse_input(slurp(file));

    if (validate->parsed()) return do_validate(x, format, out);
    if (info->parsed()) return do_info(x, format, out);
    if (ideal->parsed())
      return do_ideal(x, parse_label_set(x.algebra(), set_csv), format, out);
    if (pairs->parsed())
      return do_pairs(x, kind == "o" ? pair_kind::O : pair_kind::T,
                      pairs_limit, format, out);
    if (structure->parsed()) return do_structure(x, format, out);
    if (relcp->parsed())
      return do_relcp(x, parse_label_set(x.algebra(), ideal_csv), format, out);
    if (check->parsed()) return do_check(x, check_limit, out);

    if (construct->parsed()) {
      auto derive = [&]() -> derived_correspondence {
        if (q->count())
          return quotient_correspondence(
              x, parse_label_set(x.algebra(), quotient_csv));
        if (r->count())
          return restriction_correspondence(
              x, parse_label_set(x.algebra(), restrict_csv));
        if (w->count()) {
          std::size_t colon = omega_spec.find(':');
          if (colon == std::string::npos)
            fail(errc::schema_error, "--omega expects I:I'");
          ideal_pair p{
              parse_label_set(x.algebra(), omega_spec.substr(0, colon)),
              parse_label_set(x.algebra(), omega_spec.substr(colon + 1)),
              pair_kind::T};
          return omega_correspondence(x, p);
        }
        return restriction_correspondence(x, x.algebra().full_set());
      };
      emit_json(out, emit_document(derive().result));
      return 0;
    }

    err << "error: no subcommand\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.code_name() << ": " << e.what() << '\n';
    switch (e.code()) {
      case errc::parse_error:
      case errc::io_error:
        return 3;
      case errc::schema_error:
      case errc::duplicate_label:
      case errc::unknown_label:
      case errc::fullness_violation:
      case errc::malformed_number:
      case errc::unknown_vertex:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace corrideal
