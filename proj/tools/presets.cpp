#include "presets.hpp"

#include <stdexcept>

namespace spreadcx::cli {

namespace {

// Each preset reproduces one figure class. Values the figure leaves open
// are stated in the description.
const char* const kPresetSource = R"json([
{
  "name": "fig-derivative-3spin",
  "description": "three-spin ground-state complexity and dC/dh for J3 = 0.4 and J3 = 1",
  "scenarios": [{
    "name": "fig-derivative-3spin", "kind": "ground-sweep", "model": "three-spin",
    "axis": {"name": "h", "from": -2.0, "to": 2.5, "step": 0.005},
    "series": [
      {"label": "J3=0.4", "params": {"h": 0.0, "j3": 0.4}},
      {"label": "J3=1", "params": {"h": 0.0, "j3": 1.0}}
    ]
  }]
},
{
  "name": "fig-quench-3spin",
  "description": "three-spin single quench; red starts at the critical h = J3 + 1 = 1.4, blue ends there",
  "scenarios": [{
    "name": "fig-quench-3spin", "kind": "quench", "model": "three-spin",
    "time": {"end": 50.0, "samples": 500},
    "series": [
      {"label": "red", "initial": {"h": 1.4, "j3": 0.4}, "final": {"h": 1.5, "j3": 1.0}},
      {"label": "blue", "initial": {"h": 1.5, "j3": 1.0}, "final": {"h": 1.4, "j3": 0.4}}
    ]
  }]
},
{
  "name": "fig-multiquench-3spin",
  "description": "three-spin quench sequence H_f (0-10), H_i (10-20), H_f (20-50)",
  "scenarios": [{
    "name": "fig-multiquench-3spin", "kind": "multiquench", "model": "three-spin",
    "time": {"samples": 500},
    "series": [
      {"label": "red", "initial": {"h": 1.0, "j3": 1.2}, "segments": [
        {"params": {"h": 0.6, "j3": 1.6}, "duration": 10.0},
        {"params": {"h": 1.0, "j3": 1.2}, "duration": 10.0},
        {"params": {"h": 0.6, "j3": 1.6}, "duration": 30.0}]},
      {"label": "blue", "initial": {"h": 0.6, "j3": 1.6}, "segments": [
        {"params": {"h": 1.0, "j3": 1.2}, "duration": 10.0},
        {"params": {"h": 0.6, "j3": 1.6}, "duration": 10.0},
        {"params": {"h": 1.0, "j3": 1.2}, "duration": 30.0}]}
    ]
  }]
},
{
  "name": "fig-floquet-3spin-n",
  "description": "three-spin driven field, complexity vs cycle count (delta = 0.1, T = 1000)",
  "scenarios": [{
    "name": "fig-floquet-3spin-n", "kind": "floquet-vs-n", "model": "three-spin",
    "cycles": {"from": 0, "to": 100},
    "series": [
      {"label": "red", "params": {"h": 0.0, "j3": 0.2}, "drive": {"delta": 0.1, "period": 1000.0}},
      {"label": "blue", "params": {"h": 1.1, "j3": 0.2}, "drive": {"delta": 0.1, "period": 1000.0}},
      {"label": "green", "params": {"h": -1.1, "j3": 1.0}, "drive": {"delta": 0.1, "period": 1000.0}}
    ]
  }]
},
{
  "name": "fig-floquet-3spin-sweep",
  "description": "three-spin driven field, complexity vs h_c at n = 40, T = 1000, delta = 0.1",
  "scenarios": [{
    "name": "fig-floquet-3spin-sweep", "kind": "floquet-sweep", "model": "three-spin",
    "axis": {"name": "h", "from": -2.0, "to": 2.5, "step": 0.01},
    "series": [
      {"label": "J3=0.2", "params": {"h": 0.0, "j3": 0.2}, "drive": {"delta": 0.1, "period": 1000.0, "n": 40}},
      {"label": "J3=1", "params": {"h": 0.0, "j3": 1.0}, "drive": {"delta": 0.1, "period": 1000.0, "n": 40}}
    ]
  }]
},
{
  "name": "fig-derivative-xy",
  "description": "XY ground-state complexity and dC/dh at gamma = 0.5",
  "scenarios": [{
    "name": "fig-derivative-xy", "kind": "ground-sweep", "model": "xy",
    "axis": {"name": "h", "from": -2.0, "to": 2.0, "step": 0.005},
    "series": [{"label": "gamma=0.5", "params": {"h": 0.0, "gamma": 0.5}}]
  }]
},
{
  "name": "fig-quench-xy",
  "description": "XY single quench through the critical h = -1",
  "scenarios": [{
    "name": "fig-quench-xy", "kind": "quench", "model": "xy",
    "time": {"end": 50.0, "samples": 500},
    "series": [
      {"label": "red", "initial": {"h": 1.2, "gamma": 0.4}, "final": {"h": -1.0, "gamma": 0.2}},
      {"label": "blue", "initial": {"h": -1.0, "gamma": 0.2}, "final": {"h": 1.2, "gamma": 0.4}}
    ]
  }]
},
{
  "name": "fig-multiquench-xy",
  "description": "XY quench sequence H_f (0-10), H_i (10-20), H_f (20-50)",
  "scenarios": [{
    "name": "fig-multiquench-xy", "kind": "multiquench", "model": "xy",
    "time": {"samples": 500},
    "series": [
      {"label": "red", "initial": {"h": 1.2, "gamma": 0.4}, "segments": [
        {"params": {"h": -1.0, "gamma": 0.05}, "duration": 10.0},
        {"params": {"h": 1.2, "gamma": 0.4}, "duration": 10.0},
        {"params": {"h": -1.0, "gamma": 0.05}, "duration": 30.0}]},
      {"label": "blue", "initial": {"h": -1.0, "gamma": 0.05}, "segments": [
        {"params": {"h": 1.2, "gamma": 0.4}, "duration": 10.0},
        {"params": {"h": -1.0, "gamma": 0.05}, "duration": 10.0},
        {"params": {"h": 1.2, "gamma": 0.4}, "duration": 30.0}]}
    ]
  }]
},
{
  "name": "fig-floquet-xy-n",
  "description": "XY driven field, complexity vs cycle count (delta = 0.1, T = 1000)",
  "scenarios": [{
    "name": "fig-floquet-xy-n", "kind": "floquet-vs-n", "model": "xy",
    "cycles": {"from": 0, "to": 100},
    "series": [
      {"label": "red", "params": {"h": 1.0, "gamma": 0.2}, "drive": {"delta": 0.1, "period": 1000.0}},
      {"label": "blue", "params": {"h": -1.0, "gamma": 0.4}, "drive": {"delta": 0.1, "period": 1000.0}},
      {"label": "green", "params": {"h": 1.5, "gamma": 0.2}, "drive": {"delta": 0.1, "period": 1000.0}}
    ]
  }]
},
{
  "name": "fig-floquet-xy-sweep",
  "description": "XY driven field, complexity vs h_c at n = 40, T = 1000, delta = 0.1 (gamma = 0.2, 0.4)",
  "scenarios": [{
    "name": "fig-floquet-xy-sweep", "kind": "floquet-sweep", "model": "xy",
    "axis": {"name": "h", "from": -2.0, "to": 2.0, "step": 0.01},
    "series": [
      {"label": "gamma=0.2", "params": {"h": 0.0, "gamma": 0.2}, "drive": {"delta": 0.1, "period": 1000.0, "n": 40}},
      {"label": "gamma=0.4", "params": {"h": 0.0, "gamma": 0.4}, "drive": {"delta": 0.1, "period": 1000.0, "n": 40}}
    ]
  }]
},
{
  "name": "fig-derivative-ssh",
  "description": "SSH ground-state complexity and dC/dt1 at t2 = 1",
  "scenarios": [{
    "name": "fig-derivative-ssh", "kind": "ground-sweep", "model": "ssh",
    "axis": {"name": "t1", "from": 0.0, "to": 2.0, "step": 0.005},
    "series": [{"label": "t2=1", "params": {"t1": 0.0, "t2": 1.0}}]
  }]
},
{
  "name": "fig-multiquench-ssh",
  "description": "SSH quench sequence H_f (0-10), H_i (10-20), H_f (20-50)",
  "scenarios": [{
    "name": "fig-multiquench-ssh", "kind": "multiquench", "model": "ssh",
    "time": {"samples": 500},
    "series": [
      {"label": "red", "initial": {"t1": 1.0, "t2": 1.0}, "segments": [
        {"params": {"t1": 0.7, "t2": 1.5}, "duration": 10.0},
        {"params": {"t1": 1.0, "t2": 1.0}, "duration": 10.0},
        {"params": {"t1": 0.7, "t2": 1.5}, "duration": 30.0}]},
      {"label": "blue", "initial": {"t1": 1.5, "t2": 0.7}, "segments": [
        {"params": {"t1": 1.0, "t2": 1.0}, "duration": 10.0},
        {"params": {"t1": 1.5, "t2": 0.7}, "duration": 10.0},
        {"params": {"t1": 1.0, "t2": 1.0}, "duration": 30.0}]}
    ]
  }]
},
{
  "name": "fig-floquet-ssh-n",
  "description": "SSH driven hoppings, complexity vs cycle count (delta = 0.1, T = 1000)",
  "scenarios": [{
    "name": "fig-floquet-ssh-n", "kind": "floquet-vs-n", "model": "ssh",
    "cycles": {"from": 0, "to": 100},
    "series": [
      {"label": "blue", "params": {"t1": 0.5, "t2": 0.5}, "drive": {"delta": 0.1, "period": 1000.0}},
      {"label": "green", "params": {"t1": 1.0, "t2": 0.2}, "drive": {"delta": 0.1, "period": 1000.0}},
      {"label": "red", "params": {"t1": 0.2, "t2": 1.0}, "drive": {"delta": 0.1, "period": 1000.0}}
    ]
  }]
},
{
  "name": "fig-floquet-ssh-sweep",
  "description": "SSH driven hoppings, complexity vs t1 (t2 = 1) and vs t2 (t1 = 1) at n = 40, T = 1000, delta = 0.1",
  "scenarios": [{
    "name": "fig-floquet-ssh-sweep-t1", "kind": "floquet-sweep", "model": "ssh",
    "axis": {"name": "t1", "from": 0.1, "to": 2.0, "step": 0.01},
    "series": [{"label": "t2=1", "params": {"t1": 0.1, "t2": 1.0}, "drive": {"delta": 0.1, "period": 1000.0, "n": 40}}]
  }, {
    "name": "fig-floquet-ssh-sweep-t2", "kind": "floquet-sweep", "model": "ssh",
    "axis": {"name": "t2", "from": 0.1, "to": 2.0, "step": 0.01},
    "series": [{"label": "t1=1", "params": {"t1": 1.0, "t2": 0.1}, "drive": {"delta": 0.1, "period": 1000.0, "n": 40}}]
  }]
},
{
  "name": "fig-work-sweeps",
  "description": "work mean and variance vs the initial parameter for all three models",
  "scenarios": [{
    "name": "fig-work-3spin", "kind": "work-sweep", "model": "three-spin",
    "axis": {"name": "h", "from": -2.0, "to": 3.0, "step": 0.005},
    "series": [{"label": "3spin", "initial": {"h": 0.0, "j3": 1.0}, "final": {"h": 1.0, "j3": 0.5}}]
  }, {
    "name": "fig-work-xy", "kind": "work-sweep", "model": "xy",
    "axis": {"name": "h", "from": -2.0, "to": 2.0, "step": 0.005},
    "series": [{"label": "xy", "initial": {"h": 0.0, "gamma": 0.1}, "final": {"h": 0.6, "gamma": 0.5}}]
  }, {
    "name": "fig-work-ssh", "kind": "work-sweep", "model": "ssh",
    "axis": {"name": "t1", "from": 0.0, "to": 1.5, "step": 0.005},
    "series": [{"label": "ssh", "initial": {"t1": 0.0, "t2": 0.5}, "final": {"t1": 0.6, "t2": 0.8}}]
  }]
}
])json";

std::vector<Preset> build() {
  std::vector<Preset> out;
  for (const auto& p : Json::parse(kPresetSource)) {
    Preset preset{p.at("name").get<std::string>(), p.at("description").get<std::string>(), {}};
    for (const auto& s : p.at("scenarios")) preset.scenarios.push_back(s);
    out.push_back(std::move(preset));
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw std::out_of_range("unknown preset '" + name + "' (see list-presets)");
}

}  // namespace spreadcx::cli
