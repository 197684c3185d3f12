#ifndef YBX_POLY_IO_HPP
#define YBX_POLY_IO_HPP

#include <string>

#include "ybx/ncreduce.hpp"
#include "ybx/poly.hpp"

#include <json.hpp>

namespace ybx {

// {"vars":[["x",1],...],"terms":[{"exp":[e1,...],"num":"...","den":"..."}]}
nlohmann::ordered_json poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const nlohmann::json& j);

// compact tuple form (a0,a1,...)_v for a univariate restriction
std::string tuple_form(const ExactPoly& p, VarId v, const std::string& vname);
std::string latex_form(const ExactPoly& p);

// NCPoly JSON: {"words":[{"letters":[[1,2],[2,3]],"coef":<poly>}]}
nlohmann::ordered_json ncpoly_to_json(const NCPoly& p);

} // namespace ybx

#endif
