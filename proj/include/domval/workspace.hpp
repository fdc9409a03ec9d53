#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "domval/formats.hpp"
#include "domval/lang.hpp"

namespace domval {

// A directory of named objects, discovered by extension:
//   .poset  posets            .val   valuations       .fn  integrands and
//   .cdf    cdfs              .step  step maps             biintegrands
//   .prob   programs (keyed by file stem; other kinds by their header name)
// Names are unique per kind; cross-references resolve at load time. Files
// load in sorted filename order, posets and cdfs first.
class Workspace {
 public:
  static Workspace load(const std::filesystem::path& directory);

  const PosetPtr& poset(const std::string& name) const;
  const SimpleValuation& valuation(const std::string& name) const;
  const Integrand& integrand(const std::string& name) const;
  const BiIntegrand& bi_integrand(const std::string& name) const;
  const Cdf& cdf(const std::string& name) const;
  const StepMap& stepmap(const std::string& name) const;
  const lang::Program& program(const std::string& name) const;

  // Every CDF and step map in the workspace, for `sample` resolution.
  lang::SampleEnv sample_env() const;

  const formats::PosetMap& posets() const { return posets_; }

 private:
  template <typename Map>
  static const typename Map::mapped_type& find_in(const Map& map, const std::string& name,
                                                  const char* kind);
  template <typename Map, typename Value>
  static void insert_unique(Map& map, const std::string& name, Value value, const char* kind);

  formats::PosetMap posets_;
  std::map<std::string, SimpleValuation> valuations_;
  std::map<std::string, Integrand> integrands_;
  std::map<std::string, BiIntegrand> bi_integrands_;
  std::map<std::string, Cdf> cdfs_;
  std::map<std::string, StepMap> stepmaps_;
  std::map<std::string, lang::Program> programs_;
};

}  // namespace domval
