#include "domval/formats.hpp"

#include <sstream>
#include <vector>

namespace domval::formats {

namespace {

std::vector<std::vector<std::string>> directive_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string word;
    while (words >> word) tokens.push_back(word);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

[[noreturn]] void malformed(const std::string& what) { raise(Errc::invalid_value, what); }

void need(const std::vector<std::string>& line, std::size_t count, const std::string& what) {
  if (line.size() != count) {
    malformed("malformed '" + line[0] + "' directive in " + what);
  }
}

PosetPtr resolve_poset(const PosetMap& posets, const std::string& name) {
  auto it = posets.find(name);
  if (it == posets.end()) raise(Errc::name_not_found, "unknown poset '" + name + "'");
  return it->second;
}

}  // namespace

bool starts_with_keyword(std::string_view text, std::string_view keyword) {
  auto lines = directive_lines(text);
  return !lines.empty() && lines[0][0] == keyword;
}

PosetPtr parse_poset(std::string_view text) {
  auto lines = directive_lines(text);
  if (lines.empty() || lines[0][0] != "poset") malformed("expected 'poset <name>' header");
  need(lines[0], 2, "poset file");
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line[0] == "elem") {
      need(line, 2, "poset file");
      elems.push_back(line[1]);
    } else if (line[0] == "cover") {
      need(line, 3, "poset file");
      covers.emplace_back(line[1], line[2]);
    } else {
      malformed("unknown directive '" + line[0] + "' in poset file");
    }
  }
  return build_poset(lines[0][1], std::move(elems), covers);
}

std::pair<std::string, SimpleValuation> parse_valuation(std::string_view text,
                                                        const PosetMap& posets) {
  auto lines = directive_lines(text);
  if (lines.empty() || lines[0][0] != "valuation") {
    malformed("expected 'valuation <name> on <poset>' header");
  }
  need(lines[0], 4, "valuation file");
  if (lines[0][2] != "on") malformed("expected 'on' in valuation header");
  PosetPtr poset = resolve_poset(posets, lines[0][3]);
  std::vector<std::pair<std::string, Rational>> atoms;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line[0] != "atom") malformed("unknown directive '" + line[0] + "' in valuation file");
    need(line, 3, "valuation file");
    atoms.emplace_back(line[1], Rational::parse(line[2]));
  }
  return {lines[0][1], SimpleValuation::make_from_ids(std::move(poset), atoms)};
}

namespace {

std::pair<std::string, std::pair<PosetPtr, std::vector<Rational>>> parse_single_integrand(
    std::string_view text, const PosetMap& posets) {
  auto lines = directive_lines(text);
  if (lines.empty() || lines[0][0] != "integrand") {
    malformed("expected 'integrand <name> on <poset>' header");
  }
  need(lines[0], 4, "integrand file");
  if (lines[0][2] != "on") malformed("expected 'on' in integrand header");
  PosetPtr poset = resolve_poset(posets, lines[0][3]);
  std::vector<Rational> values(poset->size());
  std::vector<bool> seen(poset->size(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line[0] != "val") malformed("unknown directive '" + line[0] + "' in integrand file");
    need(line, 3, "integrand file");
    std::size_t idx = poset->index_of(line[1]);
    if (seen[idx]) raise(Errc::duplicate_element, "integrand value for '" + line[1] + "' given twice");
    seen[idx] = true;
    values[idx] = Rational::parse(line[2]);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      raise(Errc::unknown_element, "integrand missing a value at '" + poset->element(i) + "'");
    }
  }
  return {lines[0][1], {std::move(poset), std::move(values)}};
}

}  // namespace

std::pair<std::string, Integrand> parse_integrand(std::string_view text, const PosetMap& posets) {
  auto [name, parts] = parse_single_integrand(text, posets);
  return {std::move(name), Integrand::make(std::move(parts.first), std::move(parts.second))};
}

std::pair<std::string, BiIntegrand> parse_bi_integrand(std::string_view text,
                                                       const PosetMap& posets) {
  auto lines = directive_lines(text);
  if (lines.empty() || lines[0][0] != "biintegrand") {
    malformed("expected 'biintegrand <name> on <left> <right>' header");
  }
  need(lines[0], 5, "biintegrand file");
  if (lines[0][2] != "on") malformed("expected 'on' in biintegrand header");
  PosetPtr left = resolve_poset(posets, lines[0][3]);
  PosetPtr right = resolve_poset(posets, lines[0][4]);
  const std::size_t nr = right->size();
  std::vector<Rational> values(left->size() * nr);
  std::vector<bool> seen(values.size(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line[0] != "val") malformed("unknown directive '" + line[0] + "' in biintegrand file");
    need(line, 4, "biintegrand file");
    std::size_t cell = left->index_of(line[1]) * nr + right->index_of(line[2]);
    if (seen[cell]) {
      raise(Errc::duplicate_element,
            "biintegrand value for ('" + line[1] + "','" + line[2] + "') given twice");
    }
    seen[cell] = true;
    values[cell] = Rational::parse(line[3]);
  }
  for (bool s : seen) {
    if (!s) raise(Errc::unknown_element, "biintegrand is missing values");
  }
  return {lines[0][1], BiIntegrand::make(std::move(left), std::move(right), std::move(values))};
}

Cdf parse_cdf(std::string_view text) {
  auto lines = directive_lines(text);
  if (lines.empty() || lines[0][0] != "cdf") malformed("expected 'cdf <name>' header");
  need(lines[0], 2, "cdf file");
  std::vector<Cdf::Point> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line[0] != "point") malformed("unknown directive '" + line[0] + "' in cdf file");
    need(line, 4, "cdf file");
    points.push_back(
        {Rational::parse(line[1]), Rational::parse(line[2]), Rational::parse(line[3])});
  }
  return Cdf::make(lines[0][1], std::move(points));
}

StepMap parse_stepmap(std::string_view text, const PosetMap& posets) {
  auto lines = directive_lines(text);
  if (lines.empty() || lines[0][0] != "stepmap") {
    malformed("expected 'stepmap <name> level <m> on <poset>' header");
  }
  need(lines[0], 6, "stepmap file");
  if (lines[0][2] != "level" || lines[0][4] != "on") malformed("malformed stepmap header");
  Rational level_value = Rational::parse(lines[0][3]);
  if (level_value.den() != 1 || level_value.is_negative()) malformed("stepmap level must be a nonnegative integer");
  std::size_t level = static_cast<std::size_t>(level_value.num());
  PosetPtr poset = resolve_poset(posets, lines[0][5]);
  std::vector<std::size_t> cells;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line[0] != "cells") malformed("unknown directive '" + line[0] + "' in stepmap file");
    for (std::size_t k = 1; k < line.size(); ++k) cells.push_back(poset->index_of(line[k]));
  }
  return StepMap::make(lines[0][1], level, std::move(poset), std::move(cells));
}

std::string to_text(const FinitePoset& poset) {
  std::ostringstream out;
  out << "poset " << poset.name() << "\n";
  for (const auto& elem : poset.elements()) out << "elem " << elem << "\n";
  for (const auto& [lo, hi] : poset.covers()) {
    out << "cover " << poset.element(lo) << " " << poset.element(hi) << "\n";
  }
  return out.str();
}

std::string to_text(const SimpleValuation& valuation, const std::string& name) {
  std::ostringstream out;
  out << "valuation " << name << " on " << valuation.poset()->name() << "\n";
  for (const auto& [idx, w] : valuation.atoms()) {
    out << "atom " << valuation.poset()->element(idx) << " " << w.to_string() << "\n";
  }
  return out.str();
}

std::string to_text(const Integrand& integrand, const std::string& name) {
  std::ostringstream out;
  out << "integrand " << name << " on " << integrand.poset()->name() << "\n";
  for (std::size_t i = 0; i < integrand.poset()->size(); ++i) {
    out << "val " << integrand.poset()->element(i) << " " << integrand.at(i).to_string() << "\n";
  }
  return out.str();
}

std::string to_text(const BiIntegrand& integrand, const std::string& name) {
  std::ostringstream out;
  out << "biintegrand " << name << " on " << integrand.left()->name() << " "
      << integrand.right()->name() << "\n";
  for (std::size_t i = 0; i < integrand.left()->size(); ++i) {
    for (std::size_t j = 0; j < integrand.right()->size(); ++j) {
      out << "val " << integrand.left()->element(i) << " " << integrand.right()->element(j) << " "
          << integrand.at(i, j).to_string() << "\n";
    }
  }
  return out.str();
}

std::string to_text(const Cdf& cdf) {
  std::ostringstream out;
  out << "cdf " << cdf.name() << "\n";
  for (const auto& pt : cdf.points()) {
    out << "point " << pt.x.to_string() << " " << pt.left.to_string() << " "
        << pt.right.to_string() << "\n";
  }
  return out.str();
}

std::string to_text(const StepMap& step) {
  std::ostringstream out;
  out << "stepmap " << step.name() << " level " << step.level() << " on "
      << step.target()->name() << "\n";
  out << "cells";
  for (std::size_t c : step.cells()) out << " " << step.target()->element(c);
  out << "\n";
  return out.str();
}

}  // namespace domval::formats
