#include "pathalg_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "pathalg/classify.hpp"
#include "pathalg/error.hpp"
#include "pathalg_cli/parse.hpp"

namespace pathalg::cli {

namespace {

GraphPtr load_graph(const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    throw DomainError("cannot open " + file);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const Graph>(parse_graph(buf.str()));
}

std::string names(const Graph& g, const std::vector<VertexId>& vs) {
  if (vs.empty()) {
    return "none";
  }
  std::string out;
  for (VertexId v : vs) {
    out += (out.empty() ? "" : ", ") + g.name(v);
  }
  return out;
}

std::string cycle_verdict(const Graph& g, const CycleCheck& c) {
  if (c.holds) {
    return "true";
  }
  return "false (witness cycle: " + to_string(g, *c.witness) + ")";
}

void cmd_info(const Graph& g, std::ostream& out) {
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "sinks: " << names(g, sinks(g)) << "\n";
  out << "singular: " << names(g, singular_vertices(g)) << "\n";
  out << "acyclic: " << cycle_verdict(g, is_acyclic(g)) << "\n";
  out << "condition_L: " << cycle_verdict(g, condition_L(g)) << "\n";
  if (auto w = effectiveness_witness(g)) {
    out << "effective: false (witness " << to_string(g, *w) << ")\n";
  } else {
    out << "effective: true\n";
  }
}

// alpha as a product of edges, alpha* as a product of ghost edges.
std::string path_word(const Graph& g, const Path& p, bool ghost) {
  Monomial m{p, Path::vertex(p.range())};
  if (ghost) {
    std::swap(m.mu, m.nu);
  }
  return to_string(g, m);
}

struct Context {
  Ring ring = Ring::rationals();
  std::string graph_file;
  std::vector<std::string> operands = std::vector<std::string>(2);
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebras and Steinberg algebras of graph groupoids", "pathalg"};
  app.require_subcommand(1);
  std::string ring_text = "rat";
  app.add_option("--ring", ring_text, "Coefficient ring: int, rat or mod:<n>")
      ->default_val("rat");

  Context ctx;
  std::function<void(std::ostream&)> action;

  auto sub = [&](const std::string& name, const std::string& help,
                 std::vector<std::string> operand_names,
                 std::function<void(const GraphPtr&, std::ostream&)> body) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("graph", ctx.graph_file, "Graph file")->required();
    for (std::size_t i = 0; i < operand_names.size(); ++i) {
      s->add_option(operand_names[i], ctx.operands[i])->required();
    }
    s->callback([&ctx, &action, body] {
      action = [&ctx, body](std::ostream& o) { body(load_graph(ctx.graph_file), o); };
    });
  };

  auto leavitt = [&ctx](const GraphPtr& g, std::size_t i) {
    return parse_leavitt(g, ctx.ring, ctx.operands[i]);
  };
  auto steinberg = [&ctx](const GraphPtr& g, std::size_t i) {
    return parse_steinberg(g, ctx.ring, ctx.operands[i]);
  };

  sub("info", "Graph predicates: sinks, acyclicity, Condition (L), effectiveness", {},
      [](const GraphPtr& g, std::ostream& o) { cmd_info(*g, o); });
  sub("eq", "Test two Leavitt expressions for equality", {"x", "y"},
      [&](const GraphPtr& g, std::ostream& o) {
        o << (equals(leavitt(g, 0), leavitt(g, 1)) ? "equal" : "not equal") << "\n";
      });
  sub("normalform", "Normal form in the special-edge basis", {"x"},
      [&](const GraphPtr& g, std::ostream& o) {
        o << to_string(normal_form(leavitt(g, 0))) << "\n";
      });
  sub("mul", "Product of two Leavitt expressions, in normal form", {"x", "y"},
      [&](const GraphPtr& g, std::ostream& o) {
        o << to_string(normal_form(leavitt(g, 0) * leavitt(g, 1))) << "\n";
      });
  sub("pi", "Image in the Steinberg algebra", {"x"}, [&](const GraphPtr& g, std::ostream& o) {
    o << to_string(to_steinberg(leavitt(g, 0))) << "\n";
  });
  sub("pi-inv", "Preimage of a Steinberg expression, in normal form", {"f"},
      [&](const GraphPtr& g, std::ostream& o) {
        o << to_string(normal_form(from_steinberg(steinberg(g, 0)))) << "\n";
      });
  sub("classify", "Matrix algebra decomposition of a finite acyclic graph", {},
      [&](const GraphPtr& g, std::ostream& o) {
        o << to_string(classify(*g), ctx.ring) << "\n";
      });
  sub("reduce", "Degree-zero reduction alpha* x beta = s r(alpha)", {"x"},
      [&](const GraphPtr& g, std::ostream& o) {
        const LeavittElement x = leavitt(g, 0);
        const DegreeZeroReduction red = reduce_degree_zero(x);
        const LeavittElement lhs =
            LeavittElement::monomial(g, Monomial{Path::vertex(red.alpha.range()), red.alpha},
                                     Scalar::one(ctx.ring)) *
            x *
            LeavittElement::monomial(g, Monomial{red.beta, Path::vertex(red.beta.range())},
                                     Scalar::one(ctx.ring));
        const LeavittElement rhs =
            scale(red.s, LeavittElement::vertex(g, ctx.ring, red.alpha.range()));
        if (!equals(lhs, rhs)) {
          throw std::logic_error("reduction identity failed");
        }
        o << "alpha=" << to_string(*g, red.alpha) << " beta=" << to_string(*g, red.beta)
          << " s=" << red.s.to_string() << "\n";
        o << "verified: " << path_word(*g, red.alpha, true) << " (" << to_string(x) << ") "
          << path_word(*g, red.beta, false) << " = " << to_string(rhs) << "\n";
      });
  sub("isotropy", "Isotropy group at a boundary path", {"path"},
      [&](const GraphPtr& g, std::ostream& o) {
        const BoundaryPath p = parse_boundary_path(*g, ctx.operands[0]);
        if (auto gen = isotropy_generator(p)) {
          o << "infinite cyclic, period " << gen->lag() << "\n";
        } else {
          o << "trivial\n";
        }
      });
  sub("convolve", "Convolution of two Steinberg expressions", {"f", "g"},
      [&](const GraphPtr& g, std::ostream& o) {
        o << to_string(steinberg(g, 0) * steinberg(g, 1)) << "\n";
      });
  sub("st-reduce", "Steinberg reduction 1_C * h * 1_V = r 1_V", {"element"},
      [&](const GraphPtr& g, std::ostream& o) {
        const SteinbergElement h = normalize(steinberg(g, 0));
        const SteinbergReduction red = reduce_homogeneous(h);
        const SteinbergElement rhs = SteinbergElement::indicator(g, red.v, red.r);
        o << "C=" << to_string(*g, red.c) << " V=" << to_string(*g, red.v)
          << " r=" << red.r.to_string() << "\n";
        o << "verified: 1_C * h * 1_V = " << to_string(normalize(rhs)) << "\n";
      });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    ctx.ring = parse_ring(ring_text);
    std::ostringstream buffer;
    action(buffer);
    out << buffer.str();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what()
        << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pathalg::cli
