#include "domval/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace domval {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::name_not_found, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

template <typename Map>
const typename Map::mapped_type& Workspace::find_in(const Map& map, const std::string& name,
                                                    const char* kind) {
  auto it = map.find(name);
  if (it == map.end()) {
    raise(Errc::name_not_found, std::string("no ") + kind + " named '" + name + "' in workspace");
  }
  return it->second;
}

template <typename Map, typename Value>
void Workspace::insert_unique(Map& map, const std::string& name, Value value, const char* kind) {
  if (!map.emplace(name, std::move(value)).second) {
    raise(Errc::duplicate_name, std::string(kind) + " '" + name + "' defined in two files");
  }
}

Workspace Workspace::load(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) {
    raise(Errc::name_not_found, "workspace directory '" + directory.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  Workspace ws;
  auto pass = [&](const char* extension, auto&& handle) {
    for (const auto& path : files) {
      if (path.extension() == extension) handle(path, read_file(path));
    }
  };

  pass(".poset", [&](const auto& path, const std::string& text) {
    PosetPtr poset = formats::parse_poset(text);
    insert_unique(ws.posets_, poset->name(), poset, "poset");
    (void)path;
  });
  pass(".cdf", [&](const auto& path, const std::string& text) {
    Cdf cdf = formats::parse_cdf(text);
    std::string name = cdf.name();
    insert_unique(ws.cdfs_, name, std::move(cdf), "cdf");
    (void)path;
  });
  pass(".val", [&](const auto& path, const std::string& text) {
    auto [name, valuation] = formats::parse_valuation(text, ws.posets_);
    insert_unique(ws.valuations_, name, std::move(valuation), "valuation");
    (void)path;
  });
  pass(".fn", [&](const auto& path, const std::string& text) {
    if (formats::starts_with_keyword(text, "biintegrand")) {
      auto [name, fn] = formats::parse_bi_integrand(text, ws.posets_);
      insert_unique(ws.bi_integrands_, name, std::move(fn), "biintegrand");
    } else {
      auto [name, fn] = formats::parse_integrand(text, ws.posets_);
      insert_unique(ws.integrands_, name, std::move(fn), "integrand");
    }
    (void)path;
  });
  pass(".step", [&](const auto& path, const std::string& text) {
    StepMap step = formats::parse_stepmap(text, ws.posets_);
    std::string name = step.name();
    insert_unique(ws.stepmaps_, name, std::move(step), "stepmap");
    (void)path;
  });
  pass(".prob", [&](const auto& path, const std::string& text) {
    insert_unique(ws.programs_, path.stem().string(), lang::parse(text), "program");
  });
  return ws;
}

const PosetPtr& Workspace::poset(const std::string& name) const {
  return find_in(posets_, name, "poset");
}
const SimpleValuation& Workspace::valuation(const std::string& name) const {
  return find_in(valuations_, name, "valuation");
}
const Integrand& Workspace::integrand(const std::string& name) const {
  return find_in(integrands_, name, "integrand");
}
const BiIntegrand& Workspace::bi_integrand(const std::string& name) const {
  return find_in(bi_integrands_, name, "biintegrand");
}
const Cdf& Workspace::cdf(const std::string& name) const { return find_in(cdfs_, name, "cdf"); }
const StepMap& Workspace::stepmap(const std::string& name) const {
  return find_in(stepmaps_, name, "stepmap");
}
const lang::Program& Workspace::program(const std::string& name) const {
  return find_in(programs_, name, "program");
}

lang::SampleEnv Workspace::sample_env() const {
  lang::SampleEnv env;
  for (const auto& [name, cdf] : cdfs_) env.add(cdf);
  for (const auto& [name, step] : stepmaps_) env.add(step);
  return env;
}

}  // namespace domval
