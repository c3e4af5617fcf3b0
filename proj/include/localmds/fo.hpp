#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "localmds/graph.hpp"

namespace localmds {
namespace fo {

/// First-order formulas over graphs: atoms x=y, x<y, E(x,y); boolean
/// connectives; vertex quantifiers. `<` is VertexId order.
class Formula {
public:
  enum class Kind { Equal, Less, Edge, Not, And, Or, Implies, Exists, Forall };

  Kind kind;
  std::string a, b;  // atom operands
  std::string var;   // quantified variable
  std::vector<std::shared_ptr<const Formula>> kids;
};

using FormulaPtr = std::shared_ptr<const Formula>;

FormulaPtr eq(std::string x, std::string y);
FormulaPtr less(std::string x, std::string y);
FormulaPtr edge(std::string x, std::string y);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr land(std::vector<FormulaPtr> fs);   // n-ary, empty = true
FormulaPtr lor(std::vector<FormulaPtr> fs);    // n-ary, empty = false
FormulaPtr implies(FormulaPtr p, FormulaPtr q);
FormulaPtr exists(std::string v, FormulaPtr f);
FormulaPtr forall(std::string v, FormulaPtr f);

std::set<std::string> free_variables(const FormulaPtr& f);

/// G |= phi(env) by direct induction; quantifiers range over V(g).
/// Unbound free variables are an error at evaluation time.
bool eval(const Graph& g, const FormulaPtr& phi,
          const std::map<std::string, VertexId>& env);

/// phi(G) = { v : G |= phi(v) } for a formula with exactly one free
/// variable. Subformula results are memoized across vertices.
VertexSet defined_set(const Graph& g, const FormulaPtr& phi);

/// phi_D with cover budget 2c: x is in D iff no 2c vertices other than x
/// cover N(x). Matches phase1(g, c) exactly: each covering disjunct allows
/// E(y,x_i) or y = x_i, and witnesses are guarded to differ from x.
/// Witness variables are ordered ascending, which does not change the
/// defined set.
FormulaPtr build_phi_D(int c);

/// psi_{D'}: x is elected by some undominated member y of its closed
/// neighborhood; the elected vertex is the <-least member of N[y] whose
/// residual degree exceeds 4c + 2c(t-1), or the <-least member of N[y]
/// when no member exceeds the threshold.
FormulaPtr build_psi_Dprime(int c, int t);

/// S-expression formula syntax, e.g. (not (exists x1 (E x x1))).
std::string to_sexpr(const FormulaPtr& f);
FormulaPtr parse_sexpr(const std::string& text);

}  // namespace fo
}  // namespace localmds
