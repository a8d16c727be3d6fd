#include "qalg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qalg/algebroid_checker.hpp"
#include "qalg/derivations_ext.hpp"
#include "qalg/errors.hpp"
#include "qalg/holonomy_check.hpp"
#include "qalg/lagrangian_lift.hpp"
#include "qalg/parser.hpp"
#include "qalg/quantization_ring.hpp"
#include "qalg/w_star.hpp"

namespace qalg {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::optional<int> prec;
  int vars = 1;
  bool json = false;
  bool display = false;
  std::string input;
  std::vector<std::string> operands;
  // command specific
  int m = 0;
  std::string a, g, b, lhs, rhs, wh;
  std::string mu = "0";
  std::vector<std::string> wx, wu;
  bool canonical = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Rational json_rational(const ojson& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FormatError("expected an integer or a rational string, got " + j.dump());
}

class Command {
 public:
  Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  PrecisionWindow window() const { return opt_.prec ? PrecisionWindow::at(*opt_.prec) : PrecisionWindow::exact(); }
  int trunc() const { return opt_.prec.value_or(kDefaultScalarTrunc); }

  /// Operands from the command line, or one per non-empty line of --input.
  std::vector<std::string> operands(std::size_t count, const std::string& usage) const {
    std::vector<std::string> ops = opt_.operands;
    if (ops.empty() && !opt_.input.empty()) {
      std::string text = read_file(opt_.input);
      auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        ojson j = ojson::parse(text);
        if (j.is_array()) {
          for (const auto& item : j) ops.push_back(item.is_string() ? item.get<std::string>() : item.dump());
        } else {
          ops.push_back(j.dump());
        }
      } else {
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
          if (line.find_first_not_of(" \t\r") != std::string::npos) ops.push_back(line);
      }
    }
    if (ops.size() != count) throw CLI::ValidationError("usage: " + usage);
    return ops;
  }

  MicroSymbol symbol(const std::string& text) const {
    if (!text.empty() && text.front() == '{') return symbol_from_json(ojson::parse(text));
    return parse_symbol(text, opt_.vars, window());
  }

  MicroSymbol symbol_from_json(const ojson& j) const {
    try {
      PrecisionWindow w = window();
      if (j.contains("prec") && !j.at("prec").is_null()) w = PrecisionWindow::at(j.at("prec").get<int>());
      const auto n = static_cast<std::size_t>(opt_.vars);
      MicroSymbol a(opt_.vars, w);
      for (const auto& mono : j.at("monomials")) {
        MultiIndex key(2 * n + 2);
        auto xs = mono.value("x", std::vector<int>(n, 0));
        auto xis = mono.value("xi", std::vector<int>(n, 0));
        if (xs.size() != n || xis.size() != n) throw FormatError("monomial exponent vectors must have length " + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i) {
          if (xs[i] < 0 || xis[i] < 0) throw FormatError("only the tau exponent may be negative");
          key[i] = xs[i];
          key[n + 1 + i] = xis[i];
        }
        key[n] = mono.value("t", 0);
        if (key[n] < 0) throw FormatError("only the tau exponent may be negative");
        key[2 * n + 1] = mono.value("tau", 0);
        a.add_term(key, json_rational(mono.at("coef")));
      }
      return a;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("malformed symbol JSON: ") + e.what());
    }
  }

  std::string render(const MicroSymbol& a) const {
    std::string s = opt_.display ? display_string(a) : a.to_string();
    if (!a.window().is_exact()) s += " (mod order < " + std::to_string(a.window().lowest()) + ")";
    return s;
  }

  ojson symbol_json(const MicroSymbol& a) const {
    ojson monos = ojson::array();
    const auto n = static_cast<std::size_t>(a.dim());
    for (const auto& [k, c] : a.terms()) {
      ojson m;
      std::vector<int> xs(k.exps.begin(), k.exps.begin() + static_cast<long>(n));
      std::vector<int> xis(k.exps.begin() + static_cast<long>(n) + 1, k.exps.begin() + 2 * static_cast<long>(n) + 1);
      m["x"] = xs;
      m["t"] = k[n];
      m["xi"] = xis;
      m["tau"] = k[2 * n + 1];
      m["coef"] = qalg::to_string(c);
      monos.push_back(m);
    }
    ojson j;
    j["monomials"] = monos;
    j["prec"] = a.window().is_exact() ? ojson(nullptr) : ojson(a.window().lowest());
    return j;
  }

  void emit_symbol(const MicroSymbol& a) const {
    if (opt_.json) {
      out_ << symbol_json(a).dump() << "\n";
    } else {
      out_ << render(a) << "\n";
    }
  }

  void emit(const ojson& j, const std::vector<std::string>& text_lines) const {
    if (opt_.json) {
      out_ << j.dump() << "\n";
    } else {
      for (const auto& l : text_lines) out_ << l << "\n";
    }
  }

  static std::string verdict(bool v) { return std::string("verdict: ") + (v ? "true" : "false"); }

  ojson report_json(const Report& r) const {
    ojson arr = ojson::array();
    for (const auto& c : r.clauses) {
      ojson j;
      j["clause"] = c.name;
      j["passed"] = c.passed;
      if (!c.detail.empty()) j["detail"] = c.detail;
      arr.push_back(j);
    }
    return arr;
  }

  static void report_lines(const Report& r, std::vector<std::string>& lines, const std::string& prefix = "") {
    for (const auto& c : r.clauses) {
      std::string l = prefix + (c.passed ? "pass: " : "fail: ") + c.name;
      if (!c.detail.empty()) l += " (" + c.detail + ")";
      lines.push_back(l);
    }
  }

  std::string qrender(const QElement& q) const {
    return q.to_string([this](const MicroSymbol& a) { return opt_.display ? display_string(a) : a.to_string(); });
  }

  // --- symbol commands ---

  int normalize() {
    emit_symbol(symbol(operands(1, "normalize EXPR")[0]));
    return kExitOk;
  }
  int mul() {
    auto ops = operands(2, "mul A B");
    emit_symbol(compose(symbol(ops[0]), symbol(ops[1])));
    return kExitOk;
  }
  int star_cmd() {
    auto ops = operands(2, "star A B");
    emit_symbol(star(symbol(ops[0]), symbol(ops[1])));
    return kExitOk;
  }
  int adj() {
    emit_symbol(adjoint(symbol(operands(1, "adj EXPR")[0])));
    return kExitOk;
  }
  int comm() {
    auto ops = operands(2, "comm A B");
    emit_symbol(commutator(symbol(ops[0]), symbol(ops[1])));
    return kExitOk;
  }
  int sigma_cmd() {
    auto ops = operands(2, "sigma EXPR K");
    int k = parse_int(ops[1]);
    emit_symbol(sigma(symbol(ops[0]), k));
    return kExitOk;
  }
  int ord() {
    MicroSymbol a = symbol(operands(1, "ord EXPR")[0]);
    auto o = a.order();
    ojson j;
    j["order"] = o ? ojson(*o) : ojson(nullptr);
    emit(j, {o ? std::to_string(*o) : "none"});
    return kExitOk;
  }
  int divide() {
    auto ops = operands(2, "divide C A");
    MicroSymbol c = symbol(ops[0]);
    TMonic a = TMonic::from_symbol(symbol(ops[1]));
    MonicDivision d = divide_monic(c, a);
    ojson j;
    j["quotient"] = symbol_json(d.quotient);
    j["remainder"] = symbol_json(d.remainder);
    emit(j, {"quotient: " + render(d.quotient), "remainder: " + render(d.remainder)});
    return kExitOk;
  }
  int translate() {
    auto ops = operands(2, "translate EXPR LAMBDA");
    emit_symbol(translate_t(symbol(ops[0]), parse_rational(trim(ops[1]))));
    return kExitOk;
  }
  int qmul_cmd() {
    auto ops = operands(2, "qmul P Q");
    QElement p = parse_qelement(ops[0], opt_.vars, window()), q = parse_qelement(ops[1], opt_.vars, window());
    QElement r = qmul(p, q);
    ojson j = ojson::array();
    for (const auto& [l, a] : r.components()) j.push_back({{"lambda", qalg::to_string(l)}, {"symbol", symbol_json(a)}});
    emit(j, {qrender(r)});
    return kExitOk;
  }
  int qsplit() {
    QElement p = parse_qelement(operands(1, "qsplit P")[0], opt_.vars, window());
    auto parts = split_w_tensor_r(p);
    ojson j = ojson::array();
    std::vector<std::string> lines;
    for (const auto& [l, w] : parts) {
      j.push_back({{"lambda", qalg::to_string(l)}, {"symbol", symbol_json(w)}});
      lines.push_back(qalg::to_string(l) + ": " + render(w));
    }
    if (lines.empty()) lines.push_back("0");
    emit(j, lines);
    return kExitOk;
  }

  // --- lagrangian lift ---

  ParamCurve curve() const {
    if (opt_.input.empty()) throw CLI::ValidationError("a curve file is required (--input FILE)");
    std::string text = read_file(opt_.input);
    std::string x, u;
    std::optional<int> order;
    std::vector<Rational> xc, uc;
    bool arrays = false;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      try {
        ojson j = ojson::parse(text);
        order = j.at("N").get<int>();
        auto field = [&](const char* key, std::string& expr, std::vector<Rational>& coeffs) {
          const ojson& v = j.at(key);
          if (v.is_string()) {
            expr = v.get<std::string>();
          } else {
            for (const auto& c : v) coeffs.push_back(json_rational(c));
            arrays = true;
          }
        };
        field("x", x, xc);
        field("u", u, uc);
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed curve JSON: ") + e.what());
      }
    } else {
      std::istringstream in(text);
      int lineno = 0;
      for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw FormatError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "x") x = value;
        else if (key == "u") u = value;
        else if (key == "N") order = parse_int(value);
        else throw FormatError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    }
    if (opt_.prec) order = opt_.prec;
    if (!order) throw FormatError("curve file does not give N");
    if (*order < 0) throw FormatError("N must be non-negative");
    auto build = [&](const std::string& expr, const std::vector<Rational>& coeffs) {
      PowerSeries1 s(*order);
      if (!expr.empty() || !arrays) {
        SparsePoly p = parse_poly(expr.empty() ? "0" : expr, {"s"});
        for (const auto& [mono, c] : p.terms()) s = s + PowerSeries1::monomial(c, mono[0], *order);
      } else {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          s = s + PowerSeries1::monomial(coeffs[k], static_cast<int>(k), *order);
      }
      return s;
    };
    return ParamCurve(build(x, xc), build(u, uc));
  }

  int lift_curve_cmd() {
    ParamCurve c = curve();
    LiftResult r = lift_curve(c);
    ojson j;
    j["verdict"] = r.member;
    j["f"] = r.f.to_string();
    j["N"] = c.order();
    std::vector<std::string> lines{verdict(r.member), "f = " + r.f.to_string()};
    if (r.member) {
      j["certificate"] = r.certificate->to_string();
      lines.push_back("member: true (f = " + r.certificate->to_string() + " mod s^" + std::to_string(c.order() + 1) + ")");
    } else {
      j["obstruction"] = *r.obstructed_degree;
      lines.push_back("member: false (obstruction at s^" + std::to_string(*r.obstructed_degree) + ")");
    }
    emit(j, lines);
    return r.member ? kExitOk : kExitFalse;
  }

  int check_relation_cmd() {
    ParamCurve c = curve();
    if (opt_.lhs.empty()) throw CLI::ValidationError("--lhs is required");
    SparsePoly lhs = parse_poly(opt_.lhs, relation_vars());
    SparsePoly rhs = parse_poly(opt_.rhs.empty() ? "0" : opt_.rhs, relation_vars());
    RelationResult r = check_relation(c, lift_curve(c).f, lhs, rhs);
    ojson j;
    j["verdict"] = r.holds;
    j["residual"] = r.residual.to_string();
    emit(j, {verdict(r.holds), "residual: " + r.residual.to_string()});
    return r.holds ? kExitOk : kExitFalse;
  }

  // --- holonomy ---

  MaPresentation presentation(int& trunc_out) const {
    int m = opt_.m;
    OHElement a;
    int trunc = trunc_out = this->trunc();
    if (!opt_.input.empty()) {
      try {
        ojson j = ojson::parse(read_file(opt_.input));
        m = j.at("m").get<int>();
        if (j.contains("prec")) trunc = trunc_out = j.at("prec").get<int>();
        if (opt_.prec) trunc = trunc_out = *opt_.prec;
        for (const auto& entry : j.at("a")) {
          int i = entry.at(0).get<int>();
          const ojson& coef = entry.at(1);
          KScalar k(trunc);
          if (coef.is_string()) {
            OHElement c = parse_oh(coef.get<std::string>(), trunc);
            if (c.degree() > 0) throw FormatError("coefficients of a may not depend on x");
            k = c.coeff(0, trunc);
          } else if (coef.is_object()) {
            for (const auto& [jexp, q] : coef.items()) k.add_term(parse_int(jexp), json_rational(q));
          } else {
            k = KScalar(json_rational(coef), trunc);
          }
          a.add(i, k);
        }
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed presentation JSON: ") + e.what());
      }
    } else {
      if (opt_.a.empty()) throw CLI::ValidationError("--a or --input is required");
      a = parse_oh(opt_.a, trunc);
    }
    if (m < 1) throw CLI::ValidationError("--m must be a positive integer");
    return MaPresentation(m, a);
  }

  int reduce_mod_cmd() {
    if (opt_.m < 1) throw CLI::ValidationError("--m must be a positive integer");
    std::string g = opt_.g.empty() ? operands(1, "reduce-mod --m M G")[0] : opt_.g;
    ReduceResult r = reduce_mod(parse_oh(g, trunc()), opt_.m);
    ojson j;
    j["e"] = r.e.to_string();
    j["r"] = r.r.to_string();
    emit(j, {"e: " + r.e.to_string(), "r: " + r.r.to_string()});
    return kExitOk;
  }

  int holonomy_check_cmd() {
    int trunc = 0;
    MaPresentation p = presentation(trunc);
    TStructureResult r = t_structure_exists(p);
    ojson j;
    j["verdict"] = r.exists;
    j["m"] = p.m;
    j["a"] = p.a.to_string();
    ojson cand = ojson::object();
    std::vector<std::string> lines{verdict(r.exists), "m: " + std::to_string(p.m), "a: " + p.a.to_string()};
    std::string cl = "candidates:";
    for (const auto& [i, e] : r.candidates) {
      cand[std::to_string(i)] = e.to_string();
      cl += " e_" + std::to_string(i) + " = " + e.to_string() + ";";
    }
    if (!r.candidates.empty()) cl.pop_back();
    else cl += " none";
    j["candidates"] = cand;
    lines.push_back(cl);
    if (r.conflict) {
      j["conflict"] = {r.conflict->first, r.conflict->second};
      lines.push_back("conflict: (" + std::to_string(r.conflict->first) + ", " + std::to_string(r.conflict->second) + ")");
    }
    if (r.witness) {
      const auto& w = *r.witness;
      j["witness"] = {{"e", w.e.to_string()}, {"d", w.d.to_string()}, {"b", w.b.to_string()}, {"c", w.c.to_string()}};
      j["clauses"] = report_json(r.verification);
      lines.push_back("e: " + w.e.to_string());
      lines.push_back("d: " + w.d.to_string());
      lines.push_back("b: " + w.b.to_string());
      lines.push_back("c: " + w.c.to_string());
      report_lines(r.verification, lines);
    }
    emit(j, lines);
    return r.exists ? kExitOk : kExitFalse;
  }

  // --- derivations ---

  DerivationSpec derivation() const {
    const int n = opt_.vars;
    DerivationSpec w = DerivationSpec::zero(n);
    std::vector<std::string> wx = opt_.wx, wu = opt_.wu;
    std::string wh = opt_.wh;
    bool canonical = opt_.canonical;
    if (!opt_.input.empty()) {
      try {
        ojson j = ojson::parse(read_file(opt_.input));
        canonical = j.value("canonical", false);
        if (j.contains("w_x")) wx = j.at("w_x").get<std::vector<std::string>>();
        if (j.contains("w_u")) wu = j.at("w_u").get<std::vector<std::string>>();
        if (j.contains("w_hbar")) wh = j.at("w_hbar").get<std::string>();
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed derivation JSON: ") + e.what());
      }
    }
    if (canonical) {
      if (!wx.empty() || !wu.empty() || !wh.empty()) throw CLI::ValidationError("--canonical excludes explicit images");
      return DerivationSpec::canonical(n);
    }
    auto fill = [&](const std::vector<std::string>& src, std::vector<MicroSymbol>& dst, const char* what) {
      if (src.empty()) return;
      if (static_cast<int>(src.size()) != n) {
        throw CLI::ValidationError(std::string("give one ") + what + " image per variable (" + std::to_string(n) + ")");
      }
      for (std::size_t i = 0; i < src.size(); ++i) dst[i] = symbol(src[i]);
    };
    fill(wx, w.w_x, "--wx");
    fill(wu, w.w_u, "--wu");
    if (!wh.empty()) w.w_hbar = symbol(wh);
    return w;
  }

  int inner_generator_cmd() {
    emit_symbol(find_inner_generator(derivation()));
    return kExitOk;
  }

  int eps_check_cmd() {
    Report r = check_eps_morphism(derivation());
    ojson j;
    j["verdict"] = r.passed();
    j["clauses"] = report_json(r);
    std::vector<std::string> lines{verdict(r.passed())};
    report_lines(r, lines);
    emit(j, lines);
    return r.passed() ? kExitOk : kExitFalse;
  }

  int psi_check_cmd() {
    if (opt_.b.empty()) throw CLI::ValidationError("--b is required");
    PsiPrimeResult r = check_psi_prime(parse_rational(trim(opt_.mu)), symbol(opt_.b));
    ojson j;
    j["verdict"] = r.report.passed();
    j["d"] = symbol_json(r.d);
    j["clauses"] = report_json(r.report);
    std::vector<std::string> lines{verdict(r.report.passed()), "d: " + render(r.d)};
    report_lines(r.report, lines);
    emit(j, lines);
    return r.report.passed() ? kExitOk : kExitFalse;
  }

  // --- algebroid ---

  int algebroid_check_cmd() {
    if (opt_.input.empty()) throw CLI::ValidationError("an instance file is required (--input FILE)");
    AlgebroidInstance inst = AlgebroidInstance::from_json(read_file(opt_.input));
    Report data = check_data(inst);
    QuotientResult q = build_quotient(inst);
    bool ok = data.passed() && q.report.passed();
    ojson j;
    j["verdict"] = ok;
    j["data"] = report_json(data);
    j["quotient"] = report_json(q.report);
    ojson homs = ojson::array();
    std::vector<std::string> lines{verdict(ok)};
    report_lines(data, lines, "data ");
    report_lines(q.report, lines, "quotient ");
    for (const auto& h : q.homs) {
      const std::string src = inst.objects()[static_cast<std::size_t>(h.src)];
      const std::string dst = inst.objects()[static_cast<std::size_t>(h.dst)];
      homs.push_back({{"src", src}, {"dst", dst}, {"reference", inst.morphism(h.reference).name}, {"dim", h.dim}});
      lines.push_back("hom " + src + " -> " + dst + ": dim " + std::to_string(h.dim) + " (reference " +
                      inst.morphism(h.reference).name + ")");
    }
    j["homs"] = homs;
    emit(j, lines);
    return ok ? kExitOk : kExitFalse;
  }

 private:
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static int parse_int(const std::string& s) {
    Rational r = parse_rational(trim(s));
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw FormatError("expected an integer, got '" + s + "'");
    return static_cast<int>(r.get_num().get_si());
  }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact symbol calculus for microdifferential operators and quantization algebras", "qalg"};
  app.set_help_flag("--help", "Print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prec", opt.prec, "Precision: window lower bound for symbols, hbar truncation order, or curve order");
  app.add_option("--vars", opt.vars, "Number of x variables")->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--text", "Text output (default)")->excludes(json_flag);
  app.add_flag("--display", opt.display, "Print symbols in x, t, u, h");
  app.add_option("--input", opt.input, "Read operands or data from FILE");

  using Handler = int (Command::*)();
  struct Entry {
    const char* name;
    const char* help;
    Handler handler;
  };
  const std::vector<Entry> entries{
      {"normalize", "Canonical form of an expression", &Command::normalize},
      {"mul", "Composition a o b", &Command::mul},
      {"star", "Star product of t-free symbols", &Command::star_cmd},
      {"adj", "Formal adjoint", &Command::adj},
      {"comm", "Commutator [a, b]", &Command::comm},
      {"sigma", "Homogeneous part of degree k", &Command::sigma_cmd},
      {"ord", "Order of a symbol", &Command::ord},
      {"divide", "Division by a t-monic symbol", &Command::divide},
      {"translate", "Substitution t -> t + lambda", &Command::translate},
      {"qmul", "Product in the quantization ring", &Command::qmul_cmd},
      {"qsplit", "Components of an element centralizing hbar", &Command::qsplit},
      {"lift-curve", "Primitive f and membership test for a parametric curve", &Command::lift_curve_cmd},
      {"check-relation", "Evaluate a relation along a curve", &Command::check_relation_cmd},
      {"reduce-mod", "Reduction modulo (d_x - x^m d_t)", &Command::reduce_mod_cmd},
      {"holonomy-check", "Existence of a t-structure on M_a", &Command::holonomy_check_cmd},
      {"inner-generator", "d with ad(hbar^-1 d) = w on generators", &Command::inner_generator_cmd},
      {"eps-check", "Check phi = i + eps hbar v is a morphism", &Command::eps_check_cmd},
      {"psi-check", "Check the endomorphism data (Ad(b), mu + hbar v(b) b^-1)", &Command::psi_check_cmd},
      {"algebroid-check", "Check algebroid data and build the quotient", &Command::algebroid_check_cmd},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("operands", opt.operands, "Expressions");
    std::string name = e.name;
    if (name == "holonomy-check" || name == "reduce-mod") sub->add_option("--m", opt.m, "Exponent m >= 1");
    if (name == "holonomy-check") sub->add_option("--a", opt.a, "Coefficient a as a polynomial in x, h");
    if (name == "reduce-mod") sub->add_option("--g", opt.g, "Element to reduce, a polynomial in x, h");
    if (name == "check-relation") {
      sub->add_option("--lhs", opt.lhs, "Left side, a polynomial in x, u, f, s");
      sub->add_option("--rhs", opt.rhs, "Right side (default 0)");
    }
    if (name == "inner-generator" || name == "eps-check") {
      sub->add_option("--wx", opt.wx, "Image of x_i (repeat per variable)");
      sub->add_option("--wu", opt.wu, "Image of u_i (repeat per variable)");
    }
    if (name == "eps-check") {
      sub->add_option("--wh", opt.wh, "Image of hbar (default 0)");
      sub->add_flag("--canonical", opt.canonical, "Use v = ad(t tau)");
    }
    if (name == "psi-check") {
      sub->add_option("--mu", opt.mu, "Rational mu (default 0)");
      sub->add_option("--b", opt.b, "Gauge candidate b");
    }
    subs.emplace_back(sub, e.handler);
  }

  // Expressions such as "-x*xi" or "-h" are operands, not short options;
  // a leading space keeps CLI11 from reading them as flags.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    const std::string& s = *it;
    bool dash_operand = s.size() > 1 && s[0] == '-' && s[1] != '-' &&
                        s.find_first_not_of("0123456789", 1) != std::string::npos;
    reversed.push_back(dash_operand ? " " + s : s);
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Command cmd(opt, out);
  try {
    for (const auto& [sub, handler] : subs)
      if (sub->parsed()) return (cmd.*handler)();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace qalg
