#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "superprim/error.hpp"
#include "superprim/hecke.hpp"
#include "superprim/prim_order.hpp"
#include "superprim/restriction.hpp"
#include "superprim/root_system.hpp"
#include "superprim/star_action.hpp"
#include "superprim/weight_literal.hpp"
#include "superprim/weight_predicates.hpp"
#include "superprim/weyl_group.hpp"

namespace superprim::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  int m = 0;
  int n = 0;
  std::string weight;
  std::string nu;
  std::string lambda;
  std::string format = "json";
  std::string margin;
  std::uint64_t max_group_order = WeylGroup::kDefaultMaxOrder;
};

struct Context {
  RootSystem rs;
  std::optional<Rational> margin;
  const Options& opts;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string word_of(const ElementTable& t, ElementTable::Index i) { return to_string(t.word(i)); }
std::string word_of(const WeylGroup& g, const WeylElement& w) { return to_string(g.reduced_word(w)); }

json witnesses_json(const std::vector<Witness>& witnesses, const RootSystem* rs) {
  json arr = json::array();
  for (const auto& w : witnesses) {
    json item;
    item["root"] = rs && rs->conforms(w.root) ? rs->label(w.root) : format_weight(w.root);
    item["vector"] = format_weight(w.root);
    item["pairing"] = to_string(w.pairing);
    arr.push_back(std::move(item));
  }
  return arr;
}

Weight weight_arg(const Context& ctx, const std::string& literal, const char* flag) {
  if (literal.empty()) throw CLI::RequiredError(flag);
  return parse_weight(literal, ctx.rs);
}

std::shared_ptr<const ElementTable> make_table(const Context& ctx) {
  return std::make_shared<const ElementTable>(WeylGroup(ctx.rs), ctx.opts.max_group_order);
}

void require_format(const Context& ctx, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (ctx.opts.format == f) return;
  }
  std::string names;
  for (const char* f : allowed) names += (names.empty() ? "" : ", ") + std::string(f);
  throw CLI::ValidationError("--format", "expected one of: " + names);
}

int cmd_roots(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json"});
  const RootSystem& rs = ctx.rs;
  json j;
  j["name"] = rs.name();
  j["family"] = std::string(to_string(rs.family()));
  j["m"] = rs.m();
  j["n"] = rs.n();
  j["rank"] = rs.rank();
  j["rho"] = format_weight(rs.rho());
  j["rho_even"] = format_weight(rs.rho_even());
  j["rho_odd"] = format_weight(rs.rho_odd());
  json even = json::array();
  for (std::size_t i = 0; i < rs.positive_even().size(); ++i) {
    even.push_back({{"label", rs.label(rs.positive_even()[i].vector)},
                    {"vector", format_weight(rs.positive_even()[i].vector)},
                    {"coroot", format_weight(rs.even_coroots()[i])},
                    {"margin", to_string(rs.genericity_margin(i))}});
  }
  j["positive_even"] = std::move(even);
  json odd = json::array();
  for (const auto& g : rs.positive_odd()) {
    odd.push_back({{"label", rs.label(g.vector)}, {"vector", format_weight(g.vector)}});
  }
  j["positive_odd"] = std::move(odd);
  json simple = json::array();
  for (std::size_t s = 0; s < rs.simple_even().size(); ++s) {
    simple.push_back({{"reflection", to_string(ReducedWord{{static_cast<int>(s)}})},
                      {"label", rs.label(rs.simple_even()[s].vector)}});
  }
  j["simple_even"] = std::move(simple);
  j["weyl_group_order"] = WeylGroup(rs).order();
  emit(out, j);
  return 0;
}

int cmd_check(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json"});
  const Weight lambda = weight_arg(ctx, ctx.opts.weight, "--weight");
  const auto c = classify(ctx.rs, lambda, ctx.margin);
  json j;
  j["weight"] = format_weight(lambda);
  j["integral"] = c.integral;
  j["regular"] = c.regular;
  j["dominant"] = c.dominant;
  j["strongly_typical"] = c.strongly_typical;
  j["generic"] = c.generic;
  j["super_dominant"] = c.super_dominant;
  j["violations"] = {{"integral", witnesses_json(c.integral_violations, &ctx.rs)},
                     {"regular", witnesses_json(c.regular_violations, &ctx.rs)},
                     {"dominant", witnesses_json(c.dominant_violations, &ctx.rs)},
                     {"strongly_typical", witnesses_json(c.strongly_typical_violations, &ctx.rs)},
                     {"generic", witnesses_json(c.generic_violations, &ctx.rs)}};
  emit(out, j);
  return 0;
}

int cmd_orbit(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json", "text"});
  const Weight nu = weight_arg(ctx, ctx.opts.weight, "--weight");
  const auto table = make_table(ctx);
  const StarOrbit orbit(table, nu, ctx.margin);
  if (ctx.opts.format == "text") {
    for (ElementTable::Index w = 0; w < orbit.size(); ++w) {
      out << word_of(*table, w) << " → " << format_weight(orbit[w])
          << "  |S|=" << odd_support(ctx.rs, orbit[w]).size() << "\n";
    }
    return 0;
  }
  json rows = json::array();
  for (ElementTable::Index w = 0; w < orbit.size(); ++w) {
    rows.push_back({{"element", word_of(*table, w)},
                    {"weight", format_weight(orbit[w])},
                    {"odd_support", odd_support(ctx.rs, orbit[w]).size()}});
  }
  emit(out, {{"weight", format_weight(nu)}, {"size", orbit.size()}, {"free", orbit.is_free()}, {"rows", rows}});
  return 0;
}

int cmd_restrict(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json", "text"});
  const Weight nu = weight_arg(ctx, ctx.opts.weight, "--weight");
  const auto summands = restriction_summands(ctx.rs, nu, ctx.margin);
  auto dimension = [&](const Weight& kappa) -> std::optional<std::string> {
    if (!is_integral(ctx.rs, kappa) || !is_circle_regular_dominant(ctx.rs, kappa)) return std::nullopt;
    return weyl_dim_even(ctx.rs, kappa).str();
  };
  auto subset_labels = [&](const RestrictionSummand& s) {
    std::vector<std::string> labels;
    for (auto k : s.subset) labels.push_back(ctx.rs.label(ctx.rs.positive_odd()[k].vector));
    return labels;
  };
  if (ctx.opts.format == "text") {
    for (const auto& s : summands) {
      const auto dim = dimension(s.weight);
      out << format_weight(s.weight) << " (dim=" << dim.value_or("n/a") << ")  I={";
      const auto labels = subset_labels(s);
      for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? "," : "") << labels[k];
      out << "}\n";
    }
    return 0;
  }
  json rows = json::array();
  for (const auto& s : summands) {
    const auto dim = dimension(s.weight);
    rows.push_back({{"weight", format_weight(s.weight)},
                    {"subset", subset_labels(s)},
                    {"dim", dim ? json(*dim) : json(nullptr)}});
  }
  json support = json::array();
  for (auto k : odd_support(ctx.rs, nu).indices) support.push_back(ctx.rs.label(ctx.rs.positive_odd()[k].vector));
  emit(out, {{"weight", format_weight(nu)}, {"odd_support", support}, {"count", summands.size()}, {"summands", rows}});
  return 0;
}

int cmd_kl(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json"});
  const KazhdanLusztig kl(make_table(ctx));
  const ElementTable& t = kl.table();
  json rows = json::array();
  for (ElementTable::Index w = 0; w < t.size(); ++w) {
    for (ElementTable::Index x = 0; x < t.size(); ++x) {
      const auto& p = kl.polynomial(x, w);
      if (p.is_zero()) continue;
      rows.push_back({{"x", word_of(t, x)}, {"w", word_of(t, w)}, {"P", p.coeffs()}, {"mu", kl.mu(x, w)}});
    }
  }
  emit(out, {{"group_order", t.size()}, {"table", rows}});
  return 0;
}

int cmd_cells(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json"});
  const KazhdanLusztig kl(make_table(ctx));
  json cells = json::array();
  for (const auto& cell : kl.left_cells()) {
    json words = json::array();
    for (auto w : cell) words.push_back(word_of(kl.table(), w));
    cells.push_back(std::move(words));
  }
  emit(out, {{"group_order", kl.size()}, {"count", kl.left_cells().size()}, {"cells", cells}});
  return 0;
}

OrderLimits limits_of(const Context& ctx) {
  OrderLimits limits;
  limits.max_group_order = ctx.opts.max_group_order;
  return limits;
}

int cmd_order(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json"});
  const Weight nu = weight_arg(ctx, ctx.opts.nu, "--nu");
  const Weight lambda = weight_arg(ctx, ctx.opts.lambda, "--lambda");
  const PrimitiveOrder order(ctx.rs, ctx.margin, limits_of(ctx));
  const auto cert = order.ideal_includes(nu, lambda);
  const WeylGroup& g = order.table().group();
  json chain = json::array();
  for (std::size_t k = 0; k < cert.chain.size(); ++k) {
    const bool last = k + 1 == cert.chain.size();
    chain.push_back({{"element", word_of(g, cert.chain[k].element)},
                     {"simple", last ? json(nullptr) : json(to_string(ReducedWord{{static_cast<int>(cert.chain[k].simple)}}))}});
  }
  emit(out, {{"nu", format_weight(nu)},
             {"lambda", format_weight(lambda)},
             {"verdict", to_string(cert.verdict)},
             {"equal", cert.equal},
             {"strict", cert.verdict == Verdict::included && !cert.equal},
             {"mu1", format_weight(cert.mu1)},
             {"mu2", format_weight(cert.mu2)},
             {"w1", word_of(g, cert.w1)},
             {"w2", word_of(g, cert.w2)},
             {"chain", chain}});
  return 0;
}

int cmd_hasse(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json", "dot"});
  const Weight weight = weight_arg(ctx, ctx.opts.weight, "--weight");
  const PrimitiveOrder order(ctx.rs, ctx.margin, limits_of(ctx));
  const auto h = order.hasse_dag(weight);
  if (ctx.opts.format == "dot") {
    out << to_dot(h, order.table());
    return 0;
  }
  json nodes = json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    json words = json::array();
    json weights = json::array();
    for (auto w : h.nodes[i].elements) words.push_back(word_of(order.table(), w));
    for (const auto& w : h.nodes[i].weights) weights.push_back(format_weight(w));
    nodes.push_back({{"id", i}, {"elements", words}, {"weights", weights}});
  }
  json edges = json::array();
  for (auto [a, b] : h.edges) edges.push_back({{"from", a}, {"to", b}});
  emit(out, {{"base", format_weight(h.mu)}, {"orientation", "J(from) < J(to)"}, {"nodes", nodes}, {"edges", edges}});
  return 0;
}

int cmd_shift(const Context& ctx, std::ostream& out) {
  require_format(ctx, {"json"});
  const Weight mu = weight_arg(ctx, ctx.opts.weight, "--weight");
  const Weight kappa = typicalizing_shift(ctx.rs, mu);
  emit(out, {{"mu", format_weight(mu)}, {"kappa", format_weight(kappa)}, {"shifted", format_weight(mu + kappa)}});
  return 0;
}

// "--nu -1,2" would otherwise read -1,2 as a flag; glue values to their flags.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {"--weight", "-w", "--nu", "--lambda", "--margin"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = std::find(valued.begin(), valued.end(), args[i]) != valued.end();
    if (takes_value && i + 1 < args.size() && !args[i + 1].empty() &&
        (args[i + 1][0] == '-' || args[i + 1].rfind("−", 0) == 0)) {
      const std::string flag = args[i] == "-w" ? "--weight" : args[i];
      out.push_back(flag + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

json error_json(const Error& e, const RootSystem* rs) {
  json body;
  body["kind"] = std::string(to_string(e.kind()));
  body["message"] = e.what();
  body["witnesses"] = witnesses_json(e.witnesses(), rs);
  body["position"] = e.position() ? json(*e.position()) : json(nullptr);
  return {{"error", body}};
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Primitive ideal inclusions for gl(m|n) and osp(m|2n) in the generic region", "superprim"};
  app.require_subcommand(1);
  using Handler = std::function<int(const Context&, std::ostream&)>;
  std::map<CLI::App*, Handler> handlers;

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
    bool weight;
    bool pair;
    const char* formats;
  };
  const std::vector<Command> commands = {
      {"roots", "root data, rho and genericity margins", cmd_roots, false, false, "json"},
      {"check", "classify a weight", cmd_check, true, false, "json"},
      {"orbit", "star orbit of a generic weight", cmd_orbit, true, false, "json|text"},
      {"restrict", "even restriction of a generic simple module", cmd_restrict, true, false, "json|text"},
      {"kl", "Kazhdan-Lusztig polynomials and mu-coefficients of W", cmd_kl, false, false, "json"},
      {"cells", "left cells of W", cmd_cells, false, false, "json"},
      {"order", "decide J(nu) inside J(lambda)", cmd_order, false, true, "json"},
      {"hasse", "Hasse diagram of primitive ideals over the dominant base", cmd_hasse, true, false, "json|dot"},
      {"shift", "typicalizing shift of a weight", cmd_shift, true, false, "json"},
  };
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("family", opts.family, "gl or osp")->required();
    sub->add_option("m", opts.m, "first rank parameter")->required();
    sub->add_option("n", opts.n, "second rank parameter")->required();
    if (command.weight) sub->add_option("-w,--weight", opts.weight, "weight literal a,b|c,d")->required();
    if (command.pair) {
      sub->add_option("--nu", opts.nu, "weight literal")->required();
      sub->add_option("--lambda", opts.lambda, "weight literal")->required();
    }
    sub->add_option("--format", opts.format, std::string("output format: ") + command.formats);
    sub->add_option("--margin", opts.margin, "uniform genericity margin (integer or p/q)");
    sub->add_option("--max-group-order", opts.max_group_order, "refuse Weyl groups larger than this");
    handlers[sub] = command.handler;
  }

  std::vector<std::string> args = glue_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::optional<RootSystem> rs;
  try {
    rs = build_root_system(parse_family(opts.family), opts.m, opts.n);
    std::optional<Rational> margin;
    if (!opts.margin.empty()) margin = parse_weight(opts.margin, 1, 0)[0];
    const Context ctx{*rs, margin, opts};
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(ctx, out);
    }
    return 1;
  } catch (const Error& e) {
    emit(err, error_json(e, rs ? &*rs : nullptr));
    return e.is_usage_error() ? 1 : 2;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    emit(err, {{"error", {{"kind", "Internal"}, {"message", e.what()}, {"witnesses", json::array()}, {"position", nullptr}}}});
    return 2;
  }
}

}  // namespace superprim::cli
