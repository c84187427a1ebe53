#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpa/division.hpp"
#include "lpa/errors.hpp"
#include "lpa/morita.hpp"
#include "lpa/prufer.hpp"

namespace lpa::cli {
namespace {

using nlohmann::json;

struct Request {
  std::string command;
  std::string graph_path;
  std::string field = "rat";
  std::string cycle;
  std::vector<std::string> exprs;
  std::optional<unsigned> level;
  std::optional<unsigned> max_len;
  std::string special_edges;
  std::string series;
  std::optional<unsigned> shift;
  std::string direction = "forward";
};

class UsageError : public ParseError {
 public:
  using ParseError::ParseError;
};

std::map<std::string, std::string> parse_special_edges(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw UsageError("--special-edges expects v=e[,w=f...], got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

class Context {
 public:
  explicit Context(const Request& request) : request_(request) {
    if (request.graph_path.empty()) throw UsageError("--graph is required");
    graph_ = std::make_shared<const Graph>(Graph::load(request.graph_path));
    algebra_ = Algebra::create(graph_, Field::parse(request.field), parse_special_edges(request.special_edges));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Graph& graph() const { return *graph_; }

  Element expr(std::size_t i) const {
    if (request_.exprs.size() <= i) throw UsageError("command needs " + std::to_string(i + 1) + " --expr value(s)");
    return parse_element(algebra_, request_.exprs[i]);
  }
  std::size_t expr_count() const { return request_.exprs.size(); }

  Path cycle_path() const {
    if (request_.cycle.empty()) throw UsageError("--cycle is required");
    return parse_path(*graph_, request_.cycle);
  }
  BasicCycle cycle() const { return BasicCycle(algebra_, cycle_path()); }

  unsigned level() const {
    if (!request_.level) throw UsageError("--level is required");
    if (*request_.level < 1) throw PreconditionError("--level must be at least 1");
    return *request_.level;
  }

 private:
  const Request& request_;
  std::shared_ptr<const Graph> graph_;
  AlgebraPtr algebra_;
};

json g_json(const BasicCycle& cycle, const std::vector<GElement>& coefficients) {
  json out = json::array();
  for (const auto& g : coefficients) out.push_back(to_string(cycle, g));
  return out;
}

json prufer_json(const PruferModule& module, const PruferElement& u) {
  return {{"level", u.level()}, {"coefficients", u.is_zero() ? json::array() : g_json(module.cycle(), u.coefficients())}};
}

TruncatedPowerSeries parse_series(const Field& field, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::exception& e) {
      throw ParseError(std::string("series: ") + e.what());
    }
    std::vector<Scalar> coefficients;
    for (const auto& item : doc) {
      coefficients.push_back(field.parse_scalar(item.is_string() ? item.get<std::string>() : item.dump()));
    }
    return TruncatedPowerSeries(field, std::move(coefficients));
  }
  std::vector<Scalar> coefficients;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) coefficients.push_back(field.parse_scalar(item));
  if (coefficients.empty()) throw UsageError("--series expects a coefficient list such as 1,0,-2");
  return TruncatedPowerSeries(field, std::move(coefficients));
}

json run_command(const Request& request) {
  const std::string& cmd = request.command;
  Context ctx(request);

  if (cmd == "normalize") return to_string(ctx.expr(0));
  if (cmd == "mul") {
    if (ctx.expr_count() < 2) throw UsageError("mul needs at least two --expr values");
    Element product = ctx.expr(0);
    for (std::size_t i = 1; i < ctx.expr_count(); ++i) product = product * ctx.expr(i);
    return to_string(product);
  }
  if (cmd == "star") return to_string(ctx.expr(0).star());
  if (cmd == "ac") {
    if (!request.max_len) throw UsageError("--max-len is required");
    const Path c = ctx.cycle_path();
    if (!classify_closed_path(ctx.graph(), c).basic) throw PreconditionError("cycle is not a basic closed path");
    json out = json::array();
    for (const Path& p : enumerate_Ac(ctx.graph(), c, *request.max_len)) out.push_back(path_to_string(ctx.graph(), p));
    return out;
  }
  if (cmd == "classify") {
    const InjectivityVerdict verdict = classify_injectivity(ctx.graph(), ctx.cycle_path());
    return {{"injective", verdict.injective},
            {"witness", verdict.witness ? json(path_to_string(ctx.graph(), *verdict.witness)) : json(nullptr)},
            {"flags", to_json(verdict.flags)}};
  }
  if (cmd == "reduce") return to_json(reduce_to_source_loop(ctx.algebra(), ctx.cycle_path()));
  if (cmd == "shift-iso") {
    if (!request.shift) throw UsageError("--shift is required");
    const ShiftIsomorphism iso(ctx.algebra(), ctx.cycle_path(), *request.shift, ctx.level());
    const bool forward = request.direction == "forward";
    if (!forward && request.direction != "backward") throw UsageError("--direction is forward or backward");
    const ChenModule source(forward ? iso.first() : iso.shifted());
    const MnElement u{ctx.level(), g_representation(source, ctx.expr(0), ctx.level())};
    const MnElement image = forward ? iso.forward(u) : iso.backward(u);
    const BasicCycle& target = forward ? iso.shifted() : iso.first();
    return {{"cycle", path_to_string(ctx.graph(), target.path())},
            {"level", image.level},
            {"coefficients", g_json(target, image.coefficients)},
            {"generator_image", to_string(forward ? iso.forward_image() : iso.backward_image())}};
  }

  const ChenModule chen(ctx.cycle());
  const BasicCycle& cycle = chen.cycle();
  if (cmd == "divide") {
    const DivisionResult r = divide(chen, ctx.expr(0));
    return {{"quotient", to_string(r.quotient)}, {"remainder", to_string(cycle, r.remainder)}, {"check", "ok"}};
  }
  if (cmd == "grep") return g_json(cycle, g_representation(chen, ctx.expr(0), ctx.level()));
  if (cmd == "ideal-member") {
    const unsigned level = ctx.level();
    const bool member = in_ideal_power(chen, ctx.expr(0), level);
    return {{"member", member}, {"level", level}};
  }
  if (cmd == "ann-member") {
    const bool member = ann_U_membership(cycle, ctx.expr(0));
    return {{"member", member}};
  }
  if (cmd == "cstar-index") {
    const unsigned index = cstar_nilpotence_index(cycle, ctx.expr(0));
    return {{"index", index}};
  }

  const PruferModule module(chen);
  if (cmd == "prufer-act") {
    const PruferElement u = module.from_element(ctx.expr(1), ctx.level());
    return prufer_json(module, module.act(ctx.expr(0), u));
  }
  if (cmd == "prufer-level") {
    const unsigned level = module.submodule_level(module.from_element(ctx.expr(0), ctx.level()));
    return {{"level", level}};
  }
  if (cmd == "prufer-endo") {
    if (request.series.empty()) throw UsageError("--series is required");
    const PruferElement u = module.from_element(ctx.expr(0), ctx.level());
    return prufer_json(module, endo_apply(module, parse_series(cycle.field(), request.series), u));
  }
  if (cmd == "prufer-solve") {
    const PruferElement u = module.from_element(ctx.expr(1), ctx.level());
    const PruferElement x = solve_divisibility(module, ctx.expr(0), u);
    return {{"solution", prufer_json(module, x)},
            {"representative", to_string(module.representative(x.payload()))},
            {"check", "ok"}};
  }
  throw UsageError("unknown command '" + cmd + "'");
}

const char* const kUsage =
    "usage: lpa <command> --graph FILE [--field rat|gf:p] [--special-edges v=e,...] [options]\n"
    "commands: normalize mul star divide grep ideal-member ann-member cstar-index ac classify\n"
    "          prufer-act prufer-level prufer-endo prufer-solve shift-iso reduce\n"
    "          (also: prufer act|level|endo|solve|classify)\n";

// Joins "--opt value" into "--opt=value" so values such as "-c" survive option parsing.
std::vector<std::string> join_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {"--graph", "--field", "--cycle",  "--expr",  "--level",    "--max-len",
                                                  "--special-edges", "--series", "--shift", "--direction"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (std::find(valued.begin(), valued.end(), args[i]) != valued.end() && i + 1 < args.size()) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  if (raw_args.empty() || raw_args[0] == "--help" || raw_args[0] == "-h") {
    (raw_args.empty() ? err : out) << kUsage;
    return raw_args.empty() ? 2 : 0;
  }
  Request request;
  std::size_t consumed = 1;
  request.command = raw_args[0];
  if (request.command == "prufer") {
    if (raw_args.size() < 2) {
      err << "error: prufer needs a subcommand\n" << kUsage;
      return 2;
    }
    request.command = raw_args[1] == "classify" ? "classify" : "prufer-" + raw_args[1];
    consumed = 2;
  }

  CLI::App app("lpa");
  app.add_option("--graph", request.graph_path);
  app.add_option("--field", request.field);
  app.add_option("--cycle", request.cycle);
  app.add_option("--expr", request.exprs)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--level", request.level);
  app.add_option("--max-len", request.max_len);
  app.add_option("--special-edges", request.special_edges);
  app.add_option("--series", request.series);
  app.add_option("--shift", request.shift);
  app.add_option("--direction", request.direction);

  std::vector<std::string> rest(raw_args.begin() + static_cast<std::ptrdiff_t>(consumed), raw_args.end());
  rest = join_values(rest);
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 2;
  }

  try {
    out << run_command(request).dump() << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace lpa::cli
