#pragma once

#include <string>

#include "defo/deformation.hpp"
#include "defo/diffop.hpp"
#include "defo/form.hpp"
#include "defo/vectorfield.hpp"

namespace defo {

// Canonical printers. parse(print(v)) == v for polynomials, fields, forms
// and parameter documents; operator printing is output-only.
std::string print_poly(const Poly& p);
std::string print_field(const VectorField& x);
std::string print_form(const Form& w);
std::string print_spatial_monomial(const ExpVec& e, const VarEnv& env);
std::string print_opkey(const OpKey& key, const VarEnv& env);
std::string print_diffop(const DiffOp& op);

// Grammar (whitespace insensitive):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := nat ['/' nat] | name ['^' nat] | '(' poly ')'
//   field  := '[' poly (',' poly)* ']'
//   form   := like poly, with xi<digits> factors allowed inside terms
// Names resolve against the environment; unknown names are parse errors.
Poly parse_poly(const std::string& text, const VarEnv::Ptr& env);
VectorField parse_field(const std::string& text, const VarEnv::Ptr& env);
Form parse_form(const std::string& text, const VarEnv::Ptr& env);

// Parameter document: a JSON record {"n": int, "t0": [poly...], "t1": [...],
// "t1tilde": [...], "t2": [...]} with polynomial strings over user-chosen
// parameter names. Arities are validated against n.
ParamAssignment parse_param_document(const std::string& json_text);
std::string print_param_document(const ParamAssignment& t);

}  // namespace defo
