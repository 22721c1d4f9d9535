#pragma once

#include <map>
#include <set>

#include "sar/ast.hpp"
#include "sar/rng.hpp"

namespace sar::testing {

// Random app that satisfies every catalog rule, for property tests.
inline SarApp random_app(Rng& rng, const Catalog& catalog = Catalog::builtin(),
                         int max_screens = 2, int max_components = 6) {
  SarApp app;
  const auto& entries = catalog.entries();
  const int screens = static_cast<int>(rng.between(1, max_screens));
  int strings = 0;
  int numbers = 0;
  auto literal = [&](bool number) {
    return LiteralRef{number ? "number" + std::to_string(numbers++)
                             : "string" + std::to_string(strings++)};
  };
  for (int s = 0; s < screens; ++s) {
    Screen screen;
    std::map<std::string, int> counts;
    const int n = static_cast<int>(rng.between(0, max_components));
    for (int i = 0; i < n; ++i) {
      const auto& entry = entries[rng.below(entries.size())];
      if (entry.singleton && counts[entry.kind] > 0) continue;
      ComponentInst comp{entry.kind, ++counts[entry.kind], {}};
      for (const auto& arg : entry.args) {
        if (!rng.chance(0.5)) continue;
        comp.args.push_back(
            {arg.name, literal(arg.type == ArgType::kNumber)});
      }
      rng.shuffle(comp.args.begin(), comp.args.end());
      screen.components.push_back(std::move(comp));
    }
    std::vector<ValueRef> properties;
    std::vector<std::pair<const CatalogEntry*, ComponentRef>> targets;
    std::vector<EventRef> events;
    for (const auto& comp : screen.components) {
      const auto& entry = catalog.lookup(comp.kind);
      for (const auto& p : entry.properties) {
        properties.push_back(PropertyRef{comp.ref(), p.name});
      }
      if (!entry.actions.empty()) targets.push_back({&entry, comp.ref()});
      for (const auto& e : entry.events) events.push_back({comp.ref(), e.name});
    }
    rng.shuffle(events.begin(), events.end());
    if (!targets.empty()) {
      for (const auto& event : events) {
        if (!rng.chance(0.7)) continue;
        EventBlock block{event, {}};
        const int actions = static_cast<int>(rng.between(1, 3));
        for (int a = 0; a < actions; ++a) {
          const auto& [entry, target] = targets[rng.below(targets.size())];
          const auto& spec = entry->actions[rng.below(entry->actions.size())];
          ActionInst action{spec.name, target, {}};
          for (const auto& param : spec.params) {
            std::vector<ValueRef> options;
            if (param.accepts_kind(ValueKind::kString) ||
                param.accepts_kind(ValueKind::kColor)) {
              options.push_back(literal(false));
            }
            if (param.accepts_kind(ValueKind::kNumber)) {
              options.push_back(literal(true));
            }
            if (param.accepts_kind(ValueKind::kProperty)) {
              for (const auto& p : properties) options.push_back(p);
            }
            action.values.push_back({param.name, rng.pick(options)});
          }
          block.actions.push_back(std::move(action));
        }
        screen.code.push_back(std::move(block));
      }
    }
    app.screens.push_back(std::move(screen));
  }
  return app;
}

}  // namespace sar::testing
