#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "memgym/envs.hpp"
#include "memgym/strategy.hpp"

namespace memgym {

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Factory>
class Registry {
 public:
  void add(const std::string& name, Factory factory) {
    if (entries_.count(name) != 0) {
      throw RegistryError("duplicate registration: '" + name + "' is already registered");
    }
    entries_.emplace(name, std::move(factory));
  }

  const Factory& resolve(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
      std::string known;
      for (const auto& [k, v] : entries_) {
        if (!known.empty()) known += ", ";
        known += k;
      }
      throw RegistryError("unknown name: '" + name + "' (registered: " + known + ")");
    }
    return it->second;
  }

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
  }

 private:
  std::map<std::string, Factory> entries_;
};

using EnvFactory = std::function<std::unique_ptr<Environment>(const EnvSpec&)>;
using MemoryFactory =
    std::function<std::unique_ptr<MemoryStrategy>(const StrategyConfig&, std::shared_ptr<Summarizer>)>;

Registry<EnvFactory>& env_registry();
Registry<MemoryFactory>& memory_registry();

// Adding a new environment or memory model is a one-call change.
void register_env(const std::string& name, EnvFactory factory);
void register_memory_model(const std::string& name, MemoryFactory factory);

std::unique_ptr<Environment> make_env(const EnvSpec& spec);

// Installs "retention" / "tool_dialogue" and the built-in strategy kinds.
// Idempotent.
void register_builtins();

}  // namespace memgym
