#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "domval/integration.hpp"
#include "domval/interval.hpp"
#include "domval/monad.hpp"
#include "domval/poset.hpp"
#include "domval/valuation.hpp"

namespace domval::formats {

// Line-based text formats. Blank lines and '#' comments are skipped;
// rationals are written p/q and never as decimals. Each format starts with a
// header line naming the object:
//
//   poset <name>                          elem <id> / cover <lo> <hi>
//   valuation <name> on <poset>           atom <element> <p/q>
//   integrand <name> on <poset>           val <element> <p/q>
//   biintegrand <name> on <left> <right>  val <eL> <eR> <p/q>
//   cdf <name>                            point <x> <left> <right>
//   stepmap <name> level <m> on <poset>   cells <id> <id> ...
//
// Formats that reference posets resolve them against the map passed in.

using PosetMap = std::map<std::string, PosetPtr>;

PosetPtr parse_poset(std::string_view text);
std::pair<std::string, SimpleValuation> parse_valuation(std::string_view text,
                                                        const PosetMap& posets);
std::pair<std::string, Integrand> parse_integrand(std::string_view text, const PosetMap& posets);
std::pair<std::string, BiIntegrand> parse_bi_integrand(std::string_view text,
                                                       const PosetMap& posets);
Cdf parse_cdf(std::string_view text);
StepMap parse_stepmap(std::string_view text, const PosetMap& posets);

// True if the first directive of the text is the given keyword; used to tell
// integrand from biintegrand inside .fn files.
bool starts_with_keyword(std::string_view text, std::string_view keyword);

std::string to_text(const FinitePoset& poset);
std::string to_text(const SimpleValuation& valuation, const std::string& name);
std::string to_text(const Integrand& integrand, const std::string& name);
std::string to_text(const BiIntegrand& integrand, const std::string& name);
std::string to_text(const Cdf& cdf);
std::string to_text(const StepMap& step);

}  // namespace domval::formats
