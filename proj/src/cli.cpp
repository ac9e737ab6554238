#include "witt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "witt/endomorphism.hpp"
#include "witt/jacobi.hpp"
#include "witt/parse.hpp"
#include "witt/tame.hpp"

namespace witt::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string format = "text";
  bool timing = false;
  unsigned threads = 0;
};

/// Collects one command's result in both renderings.
class Output {
 public:
  explicit Output(std::string command) { doc_["command"] = std::move(command); }

  void field(const std::string& key, Json value, const std::string& text) {
    doc_[key] = std::move(value);
    lines_.push_back(key + ": " + text);
  }
  void field(const std::string& key, const std::string& value) { field(key, value, value); }
  /// Text-only line.
  void line(std::string text) { lines_.push_back(std::move(text)); }
  /// Structured-only field.
  void data(const std::string& key, Json value) { doc_[key] = std::move(value); }

  void print(const Settings& s, std::ostream& out) const {
    if (s.format == "structured") {
      out << doc_.dump(2) << '\n';
      return;
    }
    for (const auto& l : lines_) out << l << '\n';
  }

 private:
  Json doc_;
  std::vector<std::string> lines_;
};

unsigned default_degree(std::size_t arity) {
  if (arity == 2 || arity == 1) return 3;
  if (arity == 3) return 2;
  return 1;
}

std::size_t default_word_arity(const std::vector<TameGenerator>& gens) {
  std::size_t n = 2;
  for (const auto& g : gens)
    if (const auto* s = std::get_if<Swap>(&g)) n = std::max(n, s->index + 1);
  return n;
}

Json derivations_json(std::span<const Derivation> ds) {
  Json arr = Json::array();
  for (const auto& d : ds) arr.push_back(to_string(d));
  return arr;
}

int emit_report(Output& o, const VerificationReport& r, const Settings& s, std::ostream& out) {
  o.field("check", r.check);
  o.field("arity", r.arity, std::to_string(r.arity));
  o.field("degree", r.degree, std::to_string(r.degree));
  o.field("checked", r.checked, std::to_string(r.checked));
  o.field("failures", r.failures, std::to_string(r.failures));
  o.data("passed", r.passed());
  o.line(std::string("result: ") + (r.passed() ? "pass" : "FAIL"));
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    Json j;
    j["inputs"] = derivations_json(cx.inputs);
    j["lhs"] = to_string(cx.lhs);
    j["rhs"] = to_string(cx.rhs);
    o.data("counterexample", j);
    std::string inputs;
    for (const auto& u : cx.inputs) inputs += (inputs.empty() ? "" : " ; ") + to_string(u);
    o.line("counterexample: " + inputs);
    o.line("  lhs: " + to_string(cx.lhs));
    o.line("  rhs: " + to_string(cx.rhs));
  } else {
    o.data("counterexample", nullptr);
  }
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(3) << r.elapsed.count();
  o.line("elapsed: " + secs.str() + " s");
  // Wall-clock time would break byte-stable structured output.
  if (s.timing) o.data("elapsed_seconds", secs.str());
  o.print(s, out);
  return r.passed() ? kSuccess : kRejected;
}

void report_error(const std::string& command, const std::string& kind, const std::string& message,
                  const Settings& s, std::ostream& out, std::ostream& err) {
  err << "error: " << message << '\n';
  if (s.format == "structured") {
    Json doc;
    doc["command"] = command;
    doc["error"] = {{"kind", kind}, {"message", message}};
    out << doc.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Jacobi tuples and Witt algebra endomorphisms", "witt"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_flag("--timing", settings.timing, "Include elapsed time in structured verification output");
  app.add_option("--threads", settings.threads, "Worker threads for verification (0 = all cores)");

  std::string command_name;
  std::function<int()> action;

  std::string tuple_a, tuple_b, text_arg, word;
  unsigned degree = 0;
  std::size_t word_arity = 0;
  bool paper_literal = false;

  auto* det = app.add_subcommand("det", "Jacobian determinant of a tuple");
  det->add_option("TUPLE", tuple_a)->required();
  det->callback([&] {
    command_name = "det";
    action = [&] {
      const auto f = parse_tuple(tuple_a);
      Output o("det");
      o.field("tuple", to_string(f));
      const Polynomial d = determinant(jacobi_matrix(f));
      const auto c = is_constant(d);
      o.data("determinant", to_string(d));
      o.line("J = " + to_string(d));
      const bool ok = c && *c != 0;
      o.data("jacobi", ok);
      o.print(settings, out);
      if (!ok) {
        err << "error: not a Jacobi tuple: Jacobian determinant " << to_string(d)
            << (c ? " is zero" : " is not constant") << '\n';
        return int{kRejected};
      }
      return int{kSuccess};
    };
  });

  auto* theta = app.add_subcommand("theta", "Dual frame theta_1..theta_n of a Jacobi tuple");
  theta->add_option("TUPLE", tuple_a)->required();
  theta->callback([&] {
    command_name = "theta";
    action = [&] {
      const auto f = JacobiTuple::make(parse_tuple(tuple_a));
      Output o("theta");
      o.field("tuple", to_string(f));
      o.field("jacobian", to_string(f.jacobian()));
      o.data("theta", derivations_json(f.theta()));
      for (std::size_t j = 1; j <= f.arity(); ++j) o.line("theta" + std::to_string(j) + " = " + to_string(f.theta(j)));
      o.print(settings, out);
      return int{kSuccess};
    };
  });

  auto* comp = app.add_subcommand("compose", "Product f.g with h_i = g_i(f)");
  comp->add_option("F", tuple_a)->required();
  comp->add_option("G", tuple_b)->required();
  comp->callback([&] {
    command_name = "compose";
    action = [&] {
      const auto f = JacobiTuple::make(parse_tuple(tuple_a));
      const auto g = JacobiTuple::make(parse_tuple(tuple_b));
      if (f.arity() != g.arity()) throw ArityMismatch(f.arity(), g.arity(), "compose");
      const auto h = compose(f, g);
      Output o("compose");
      o.field("f", to_string(f));
      o.field("g", to_string(g));
      o.field("product", to_string(h));
      o.field("jacobian", to_string(h.jacobian()));
      o.print(settings, out);
      return int{kSuccess};
    };
  });

  auto* endo = app.add_subcommand("endo", "Witt algebra endomorphism sigma_f");
  endo->require_subcommand(1);
  auto* endo_apply = endo->add_subcommand("apply", "Apply sigma_f to a derivation");
  endo_apply->add_option("TUPLE", tuple_a)->required();
  endo_apply->add_option("DERIVATION", text_arg)->required();
  endo_apply->callback([&] {
    command_name = "endo apply";
    action = [&] {
      const auto sigma = WittEndomorphism::from_tuple(JacobiTuple::make(parse_tuple(tuple_a)));
      const auto d = parse_derivation(text_arg, sigma.arity());
      Output o("endo apply");
      o.field("tuple", to_string(sigma.tuple()));
      o.field("derivation", to_string(d));
      o.field("image", to_string(sigma(d)));
      o.print(settings, out);
      return int{kSuccess};
    };
  });

  auto* verify = app.add_subcommand("verify", "Exhaustive checks on bounded-degree bases");
  verify->require_subcommand(1);
  auto* verify_endo = verify->add_subcommand("endo", "sigma_f([u,v]) = [sigma_f(u), sigma_f(v)] for basis pairs");
  verify_endo->add_option("TUPLE", tuple_a)->required();
  verify_endo->add_option("--degree", degree, "Basis degree bound (default 3 for n=2, 2 for n=3)");
  verify_endo->callback([&] {
    command_name = "verify endo";
    action = [&] {
      const auto sigma = WittEndomorphism::from_tuple(JacobiTuple::make(parse_tuple(tuple_a)));
      const unsigned d = verify_endo->count("--degree") ? degree : default_degree(sigma.arity());
      Output o("verify endo");
      o.field("tuple", to_string(sigma.tuple()));
      return emit_report(o, verify_endomorphism(sigma, d, {.threads = settings.threads}), settings, out);
    };
  });
  auto* verify_xi = verify->add_subcommand("xi", "sigma_{f.g} = sigma_f o sigma_g on basis elements");
  verify_xi->add_option("F", tuple_a)->required();
  verify_xi->add_option("G", tuple_b)->required();
  verify_xi->add_option("--degree", degree, "Basis degree bound (default 3 for n=2, 2 for n=3)");
  verify_xi->callback([&] {
    command_name = "verify xi";
    action = [&] {
      const auto f = JacobiTuple::make(parse_tuple(tuple_a));
      const auto g = JacobiTuple::make(parse_tuple(tuple_b));
      if (f.arity() != g.arity()) throw ArityMismatch(f.arity(), g.arity(), "verify xi");
      const unsigned d = verify_xi->count("--degree") ? degree : default_degree(f.arity());
      Output o("verify xi");
      o.field("f", to_string(f));
      o.field("g", to_string(g));
      return emit_report(o, verify_xi_homomorphism(f, g, d, {.threads = settings.threads}), settings, out);
    };
  });

  auto* tame = app.add_subcommand("tame", "Tame automorphism words");
  tame->require_subcommand(1);
  auto* tame_eval = tame->add_subcommand("eval", "Jacobi tuple of a word");
  tame_eval->add_option("WORD", word)->required();
  tame_eval->add_option("--n", word_arity, "Number of variables (default: smallest valid, at least 2)");
  tame_eval->callback([&] {
    command_name = "tame eval";
    action = [&] {
      const auto gens = parse_generators(word);
      const TameWord w(word_arity ? word_arity : default_word_arity(gens), gens);
      const auto t = to_tuple(w);
      Output o("tame eval");
      o.field("word", to_string(w));
      o.field("arity", w.arity(), std::to_string(w.arity()));
      o.field("tuple", to_string(t));
      o.field("jacobian", to_string(t.jacobian()));
      o.print(settings, out);
      return int{kSuccess};
    };
  });
  auto* tame_invert = tame->add_subcommand("invert", "Inverse word");
  tame_invert->add_option("WORD", word)->required();
  tame_invert->add_option("--n", word_arity, "Number of variables (default: smallest valid, at least 2)");
  tame_invert->callback([&] {
    command_name = "tame invert";
    action = [&] {
      const auto gens = parse_generators(word);
      const TameWord w(word_arity ? word_arity : default_word_arity(gens), gens);
      Output o("tame invert");
      o.field("word", to_string(w));
      o.field("inverse", to_string(invert(w)));
      o.print(settings, out);
      return int{kSuccess};
    };
  });

  auto* nag = app.add_subcommand("nagata", "The Nagata automorphism of A_3");
  nag->callback([&] {
    command_name = "nagata";
    action = [&] {
      const auto t = nagata();
      const Polynomial x1 = Polynomial::variable(3, 1), x2 = Polynomial::variable(3, 2),
                       x3 = Polynomial::variable(3, 3);
      const Polynomial w = x2 * x2 + x1 * x3;
      const bool fixed = substitute(w, t.components()) == w;
      Output o("nagata");
      o.field("tuple", to_string(t));
      o.field("jacobian", to_string(t.jacobian()));
      o.field("invariant", to_string(w));
      o.field("invariant_fixed", fixed, fixed ? "yes" : "no");
      o.print(settings, out);
      return fixed ? int{kSuccess} : int{kRejected};
    };
  });

  auto* w2 = app.add_subcommand("w2", "Closed-form action of tame generators on W_2");
  w2->require_subcommand(1);
  auto* w2_act = w2->add_subcommand("act", "Image of a derivation under a generator");
  w2_act->add_option("GEN", word)->required();
  w2_act->add_option("BASIS", text_arg)->required();
  w2_act->add_flag("--paper-literal", paper_literal, "Use the displays as printed instead of the normative forms");
  w2_act->callback([&] {
    command_name = "w2 act";
    action = [&] {
      const auto g = parse_generator(word);
      const auto u = parse_derivation(text_arg, 2);
      const auto image = w2_action(g, u, paper_literal ? W2Formula::PaperLiteral : W2Formula::Normative);
      Output o("w2 act");
      o.field("generator", to_string(g));
      o.field("formula", paper_literal ? "paper-literal" : "normative");
      o.field("derivation", to_string(u));
      o.field("image", to_string(image));
      o.print(settings, out);
      return int{kSuccess};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kSuccess} : int{kUsage};
  }
  if (!action) {
    err << "error: no command given\n";
    return kUsage;
  }

  try {
    return action();
  } catch (const NotJacobi& e) {
    report_error(command_name, "NotJacobi", e.what(), settings, out, err);
  } catch (const ParseError& e) {
    report_error(command_name, "ParseError", e.what(), settings, out, err);
  } catch (const InternalError& e) {
    report_error(command_name, "InternalError", e.what(), settings, out, err);
  } catch (const Error& e) {
    report_error(command_name, "InvalidInput", e.what(), settings, out, err);
  }
  return kRejected;
}

}  // namespace witt::cli
