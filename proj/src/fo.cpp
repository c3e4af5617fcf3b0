#include "localmds/fo.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace localmds {
namespace fo {

namespace {

FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Equal:
    case Formula::Kind::Less:
    case Formula::Kind::Edge:
      if (!bound.count(f.a)) out.insert(f.a);
      if (!bound.count(f.b)) out.insert(f.b);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool fresh = bound.insert(f.var).second;
      collect_free(*f.kids[0], bound, out);
      if (fresh) bound.erase(f.var);
      return;
    }
    default:
      for (const auto& k : f.kids) collect_free(*k, bound, out);
  }
}

// Evaluation session: environment as a stack plus per-node memoization
// keyed by the values of the node's free variables.
class Eval {
public:
  explicit Eval(const Graph& g) : g_(g) {}

  void bind(const std::string& v, VertexId x) { env_.emplace_back(v, x); }
  void unbind() { env_.pop_back(); }

  VertexId lookup(const std::string& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == v) return it->second;
    throw std::invalid_argument("fo::eval: unbound variable '" + v + "'");
  }

  bool run(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Equal:
        return lookup(f.a) == lookup(f.b);
      case Formula::Kind::Less:
        return lookup(f.a) < lookup(f.b);
      case Formula::Kind::Edge:
        return g_.has_edge(lookup(f.a), lookup(f.b));
      case Formula::Kind::Not:
        return !run(*f.kids[0]);
      case Formula::Kind::And:
        for (const auto& k : f.kids)
          if (!run(*k)) return false;
        return true;
      case Formula::Kind::Or:
        for (const auto& k : f.kids)
          if (run(*k)) return true;
        return false;
      case Formula::Kind::Implies:
        return !run(*f.kids[0]) || run(*f.kids[1]);
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        return quantifier_memo(f);
    }
    throw std::logic_error("fo::eval: bad node");
  }

private:
  // Quantifier nodes carry the evaluation cost; cache their results keyed
  // by the values of their free variables.
  bool quantifier_memo(const Formula& f) {
    auto fit = free_.find(&f);
    if (fit == free_.end()) {
      std::set<std::string> bound, out;
      collect_free(f, bound, out);
      fit = free_.emplace(&f, std::vector<std::string>(out.begin(), out.end()))
                .first;
    }
    std::vector<VertexId> key;
    key.reserve(fit->second.size());
    bool cacheable = true;
    for (const auto& v : fit->second) {
      if (auto x = lookup_opt(v))
        key.push_back(*x);
      else {
        cacheable = false;  // unbound frees may be legal under short-circuit
        break;
      }
    }
    if (!cacheable) return quantifier(f);
    auto& table = memo_[&f];
    auto mit = table.find(key);
    if (mit != table.end()) return mit->second;
    bool r = quantifier(f);
    table.emplace(std::move(key), r);
    return r;
  }

  bool quantifier(const Formula& f) {
    const bool is_exists = f.kind == Formula::Kind::Exists;
    for (VertexId x : g_.vertices()) {
      bind(f.var, x);
      bool r = run(*f.kids[0]);
      unbind();
      if (is_exists && r) return true;
      if (!is_exists && !r) return false;
    }
    return !is_exists;
  }

  std::optional<VertexId> lookup_opt(const std::string& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == v) return it->second;
    return std::nullopt;
  }

  const Graph& g_;
  std::vector<std::pair<std::string, VertexId>> env_;
  std::unordered_map<const Formula*, std::vector<std::string>> free_;
  std::unordered_map<const Formula*, std::map<std::vector<VertexId>, bool>> memo_;
};

}  // namespace

FormulaPtr eq(std::string x, std::string y) {
  return node({Formula::Kind::Equal, std::move(x), std::move(y), "", {}});
}
FormulaPtr less(std::string x, std::string y) {
  return node({Formula::Kind::Less, std::move(x), std::move(y), "", {}});
}
FormulaPtr edge(std::string x, std::string y) {
  return node({Formula::Kind::Edge, std::move(x), std::move(y), "", {}});
}
FormulaPtr lnot(FormulaPtr f) {
  return node({Formula::Kind::Not, "", "", "", {std::move(f)}});
}
FormulaPtr land(std::vector<FormulaPtr> fs) {
  return node({Formula::Kind::And, "", "", "", std::move(fs)});
}
FormulaPtr lor(std::vector<FormulaPtr> fs) {
  return node({Formula::Kind::Or, "", "", "", std::move(fs)});
}
FormulaPtr implies(FormulaPtr p, FormulaPtr q) {
  return node({Formula::Kind::Implies, "", "", "", {std::move(p), std::move(q)}});
}
FormulaPtr exists(std::string v, FormulaPtr f) {
  return node({Formula::Kind::Exists, "", "", std::move(v), {std::move(f)}});
}
FormulaPtr forall(std::string v, FormulaPtr f) {
  return node({Formula::Kind::Forall, "", "", std::move(v), {std::move(f)}});
}

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(*f, bound, out);
  return out;
}

bool eval(const Graph& g, const FormulaPtr& phi,
          const std::map<std::string, VertexId>& env) {
  Eval session(g);
  for (const auto& [v, x] : env) {
    if (!g.has_vertex(x))
      throw std::invalid_argument("fo::eval: env binds unknown vertex");
    session.bind(v, x);
  }
  return session.run(*phi);
}

VertexSet defined_set(const Graph& g, const FormulaPtr& phi) {
  auto fv = free_variables(phi);
  if (fv.size() != 1)
    throw std::invalid_argument("defined_set: formula must have exactly one free variable");
  const std::string var = *fv.begin();
  Eval session(g);
  VertexSet out;
  for (VertexId v : g.vertices()) {
    session.bind(var, v);
    if (session.run(*phi)) out.insert(v);
    session.unbind();
  }
  return out;
}

FormulaPtr build_phi_D(int c) {
  if (c < 1) throw std::invalid_argument("build_phi_D: c >= 1");
  const int k = 2 * c;
  std::vector<std::string> xs;
  for (int i = 1; i <= k; ++i) xs.push_back("x" + std::to_string(i));

  // forall y (E(x,y) -> OR_i (E(y,x_i) or y = x_i))
  std::vector<FormulaPtr> covered;
  for (const auto& xi : xs) {
    covered.push_back(edge("y", xi));
    covered.push_back(eq("y", xi));
  }
  FormulaPtr inner = forall("y", implies(edge("x", "y"), lor(std::move(covered))));

  // Guards sit directly under their quantifier so failing assignments are
  // pruned early: witness x_i differs from x, witnesses ascend (repetition
  // allowed, so the defined set is unchanged).
  for (int i = k - 1; i >= 0; --i) {
    std::vector<FormulaPtr> conj;
    conj.push_back(lnot(eq(xs[i], "x")));
    if (i > 0) conj.push_back(lnot(less(xs[i], xs[i - 1])));
    conj.push_back(std::move(inner));
    inner = exists(xs[i], land(std::move(conj)));
  }
  return lnot(std::move(inner));
}

namespace {

FormulaPtr member(const std::string& u, const std::string& y) {
  return lor({edge(u, y), eq(u, y)});
}

// Undominated by D = phi_D(G): no member of the closed neighborhood
// satisfies phi_D.
FormulaPtr undominated(const std::string& y, const FormulaPtr& phi_d_z) {
  return forall("z", implies(phi_d_z,
                             land({lnot(edge(y, "z")), lnot(eq(y, "z"))})));
}

// Residual degree of w exceeds the threshold: there are threshold+1
// distinct undominated members of N[w], enumerated in ascending order.
FormulaPtr big_degree(const std::string& w, int threshold,
                      const FormulaPtr& phi_d_z) {
  FormulaPtr inner = nullptr;
  for (int i = threshold + 1; i >= 1; --i) {
    std::string ui = "u" + std::to_string(i);
    std::vector<FormulaPtr> conj;
    if (i > 1) conj.push_back(less("u" + std::to_string(i - 1), ui));
    conj.push_back(member(ui, w));
    conj.push_back(undominated(ui, phi_d_z));
    if (inner) conj.push_back(std::move(inner));
    inner = exists(ui, land(std::move(conj)));
  }
  return inner;
}

}  // namespace

FormulaPtr build_psi_Dprime(int c, int t) {
  if (c < 1 || t < 3) throw std::invalid_argument("build_psi_Dprime: c >= 1, t >= 3");
  const int threshold = 4 * c + 2 * c * (t - 1);

  // phi_D with its free variable renamed to z resp. w's member u_i; the
  // same shared subtree keeps memoization effective.
  FormulaPtr phi_d = build_phi_D(c);
  auto rename = [&](const std::string& to) -> FormulaPtr {
    // phi_D's free variable is "x": wrap as exists z' (z' = to and ...) is
    // wasteful; instead rebuild with substitution.
    struct Sub {
      static FormulaPtr apply(const FormulaPtr& f, const std::string& from,
                              const std::string& to) {
        Formula g = *f;
        if (g.kind == Formula::Kind::Exists || g.kind == Formula::Kind::Forall)
          if (g.var == from) return f;  // shadowed
        auto fix = [&](std::string& s) {
          if (s == from) s = to;
        };
        fix(g.a);
        fix(g.b);
        for (auto& k : g.kids) k = apply(k, from, to);
        return std::make_shared<const Formula>(std::move(g));
      }
    };
    return Sub::apply(phi_d, "x", to);
  };
  FormulaPtr phi_d_z = rename("z");

  FormulaPtr big_x = big_degree("x", threshold, phi_d_z);
  FormulaPtr big_w = big_degree("w", threshold, phi_d_z);

  // x is the <-least member of N[y] above the threshold, or the <-least
  // member of N[y] when nobody is above it.
  FormulaPtr xi_max = lor({
      land({big_x,
            forall("w", implies(land({member("w", "y"), big_w}),
                                lnot(less("w", "x"))))}),
      land({forall("w", implies(member("w", "y"), lnot(big_w))),
            forall("w", implies(member("w", "y"), lnot(less("w", "x"))))}),
  });

  return exists("y", land({member("x", "y"), undominated("y", phi_d_z),
                           std::move(xi_max)}));
}

namespace {

void print(const FormulaPtr& f, std::ostream& out) {
  switch (f->kind) {
    case Formula::Kind::Equal:
      out << "(= " << f->a << " " << f->b << ")";
      return;
    case Formula::Kind::Less:
      out << "(< " << f->a << " " << f->b << ")";
      return;
    case Formula::Kind::Edge:
      out << "(E " << f->a << " " << f->b << ")";
      return;
    case Formula::Kind::Not:
      out << "(not ";
      print(f->kids[0], out);
      out << ")";
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      out << (f->kind == Formula::Kind::And ? "(and" : "(or");
      for (const auto& k : f->kids) {
        out << " ";
        print(k, out);
      }
      out << ")";
      return;
    }
    case Formula::Kind::Implies:
      out << "(implies ";
      print(f->kids[0], out);
      out << " ";
      print(f->kids[1], out);
      out << ")";
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out << (f->kind == Formula::Kind::Exists ? "(exists " : "(forall ")
          << f->var << " ";
      print(f->kids[0], out);
      out << ")";
      return;
  }
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("formula: unexpected end");
    return s[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("formula: expected '") + c + "'");
    ++pos;
  }
  std::string token() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    if (start == pos) throw std::invalid_argument("formula: expected token");
    return s.substr(start, pos - start);
  }

  FormulaPtr parse() {
    expect('(');
    std::string head = token();
    FormulaPtr out;
    if (head == "=" || head == "<" || head == "E") {
      std::string a = token(), b = token();
      out = head == "=" ? eq(a, b) : head == "<" ? less(a, b) : edge(a, b);
    } else if (head == "not") {
      out = lnot(parse());
    } else if (head == "and" || head == "or") {
      std::vector<FormulaPtr> kids;
      while (peek() != ')') kids.push_back(parse());
      out = head == "and" ? land(std::move(kids)) : lor(std::move(kids));
    } else if (head == "implies" || head == "->") {
      FormulaPtr p = parse(), q = parse();
      out = implies(std::move(p), std::move(q));
    } else if (head == "exists" || head == "forall") {
      std::string v = token();
      FormulaPtr body = parse();
      out = head == "exists" ? exists(v, std::move(body))
                             : forall(v, std::move(body));
    } else {
      throw std::invalid_argument("formula: unknown operator '" + head + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

std::string to_sexpr(const FormulaPtr& f) {
  std::ostringstream out;
  print(f, out);
  return out.str();
}

FormulaPtr parse_sexpr(const std::string& text) {
  Parser p{text};
  FormulaPtr f = p.parse();
  p.skip();
  if (p.pos != text.size())
    throw std::invalid_argument("formula: trailing input");
  return f;
}

}  // namespace fo
}  // namespace localmds
