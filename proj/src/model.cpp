// Copyright 2026 The lbisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lbisim/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lbisim/errors.hpp"

namespace lbisim {

using nlohmann::json;

namespace {

template <typename T>
auto find_label(T &items, std::string_view label) {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].label == label) return std::optional<std::size_t>(i);
    }
    return std::optional<std::size_t>();
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
   public:
    Reader(const json &obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) fail(path_, "expected an object");
    }

    void allow(std::initializer_list<const char *> keys) const {
        std::set<std::string> ok(keys.begin(), keys.end());
        ok.insert("note");
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!ok.count(it.key())) fail(path_ + "." + it.key(), "unknown field");
        }
    }

    std::string str(const char *key) const {
        const json &v = need(key);
        if (!v.is_string()) fail(field(key), "expected a string");
        return v.get<std::string>();
    }

    double num(const char *key) const {
        const json &v = need(key);
        if (!v.is_number()) fail(field(key), "expected a number");
        double x = v.get<double>();
        if (!std::isfinite(x)) fail(field(key), "expected a finite number");
        return x;
    }

    int integer(const char *key, int fallback) const {
        if (!obj_.contains(key)) return fallback;
        const json &v = obj_.at(key);
        if (!v.is_number_integer()) fail(field(key), "expected an integer");
        return v.get<int>();
    }

    bool flag(const char *key) const {
        if (!obj_.contains(key)) return false;
        const json &v = obj_.at(key);
        if (!v.is_boolean()) fail(field(key), "expected true or false");
        return v.get<bool>();
    }

    std::vector<std::string> strings(const char *key) const {
        const json &v = need(key);
        if (!v.is_array()) fail(field(key), "expected an array of labels");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string()) fail(field(key) + "[" + std::to_string(i) + "]", "expected a string");
            out.push_back(v[i].get<std::string>());
        }
        return out;
    }

    std::string opt_str(const char *key) const { return obj_.contains(key) ? str(key) : std::string(); }

   private:
    const json &need(const char *key) const {
        if (!obj_.contains(key)) fail(field(key), "missing required field");
        return obj_.at(key);
    }
    std::string field(const char *key) const { return path_ + "." + key; }
    [[noreturn]] static void fail(const std::string &where, const std::string &what) {
        throw ParseError(where, what);
    }

    const json &obj_;
    std::string path_;
};

template <typename F>
void each(const json &root, const char *section, std::string_view source, F &&f) {
    if (!root.contains(section)) return;
    const json &arr = root.at(section);
    if (!arr.is_array()) throw ParseError(std::string(source) + ":" + section, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        f(Reader(arr[i], std::string(source) + ":" + section + "[" + std::to_string(i) + "]"));
    }
}

}  // namespace

const QuditSpec &DeviceSpec::qudit(std::string_view label) const {
    auto i = qudit_index(label);
    if (!i) throw LabelError("unknown qudit '" + std::string(label) + "'");
    return qudits[*i];
}

QuditSpec &DeviceSpec::qudit(std::string_view label) {
    auto i = qudit_index(label);
    if (!i) throw LabelError("unknown qudit '" + std::string(label) + "'");
    return qudits[*i];
}

const ModeSpec &DeviceSpec::mode(std::string_view label) const {
    auto i = mode_index(label);
    if (!i) throw LabelError("unknown mode '" + std::string(label) + "'");
    return modes[*i];
}

ModeSpec &DeviceSpec::mode(std::string_view label) {
    auto i = mode_index(label);
    if (!i) throw LabelError("unknown mode '" + std::string(label) + "'");
    return modes[*i];
}

std::optional<std::size_t> DeviceSpec::qudit_index(std::string_view label) const {
    return find_label(qudits, label);
}

std::optional<std::size_t> DeviceSpec::mode_index(std::string_view label) const {
    return find_label(modes, label);
}

double DeviceSpec::g_mhz(std::string_view qubit, std::string_view mode_label) const {
    double g = 0.0;
    for (const auto &c : couplings) {
        if (c.qubit == qubit && c.mode == mode_label) g += c.g_mhz;
    }
    return g;
}

double DeviceSpec::j0_mhz(std::string_view a, std::string_view b) const {
    double j = 0.0;
    for (const auto &d : direct) {
        if ((d.qubit_a == a && d.qubit_b == b) || (d.qubit_a == b && d.qubit_b == a)) j += d.j0_mhz;
    }
    return j;
}

const PairSpec &DeviceSpec::pair(std::string_view name) const {
    for (const auto &p : pairs) {
        if (p.name() == name) return p;
    }
    for (const auto &p : pairs) {
        if (p.label.empty() && p.qubit_b + "_" + p.qubit_a == name) return p;
    }
    throw LabelError("unknown pair '" + std::string(name) + "'");
}

DeviceSpec parse_device(std::string_view text, std::string_view source) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::string msg = e.what();
        auto pos = msg.find("]: ");
        throw ParseError(std::string(source) + ", " + line_col(text, e.byte == 0 ? 0 : e.byte - 1),
                         pos == std::string::npos ? msg : msg.substr(pos + 3));
    }
    if (!root.is_object()) throw ParseError(std::string(source), "top level must be an object");
    for (auto it = root.begin(); it != root.end(); ++it) {
        static const std::set<std::string> sections = {"name",      "qudits", "modes", "couplings",
                                                       "direct",    "pairs",  "note",  "schema_version"};
        if (!sections.count(it.key())) throw ParseError(std::string(source) + ":" + it.key(), "unknown section");
    }
    if (!root.contains("qudits")) throw ParseError(std::string(source) + ":qudits", "missing required section");

    DeviceSpec spec;
    if (root.contains("name")) {
        if (!root["name"].is_string()) throw ParseError(std::string(source) + ":name", "expected a string");
        spec.name = root["name"].get<std::string>();
    }
    each(root, "qudits", source, [&](const Reader &r) {
        r.allow({"label", "omega_q_ghz", "delta_ghz", "levels", "assumed"});
        spec.qudits.push_back({r.str("label"), r.num("omega_q_ghz"), r.num("delta_ghz"),
                               r.integer("levels", kDefaultQuditLevels), r.flag("assumed")});
    });
    each(root, "modes", source, [&](const Reader &r) {
        r.allow({"label", "omega_r_ghz", "photons", "assumed"});
        spec.modes.push_back(
            {r.str("label"), r.num("omega_r_ghz"), r.integer("photons", kDefaultModePhotons), r.flag("assumed")});
    });
    each(root, "couplings", source, [&](const Reader &r) {
        r.allow({"qubit", "mode", "g_mhz", "assumed"});
        spec.couplings.push_back({r.str("qubit"), r.str("mode"), r.num("g_mhz"), r.flag("assumed")});
    });
    each(root, "direct", source, [&](const Reader &r) {
        r.allow({"a", "b", "j0_mhz", "assumed"});
        spec.direct.push_back({r.str("a"), r.str("b"), r.num("j0_mhz"), r.flag("assumed")});
    });
    each(root, "pairs", source, [&](const Reader &r) {
        r.allow({"a", "b", "modes", "label"});
        spec.pairs.push_back({r.str("a"), r.str("b"), r.strings("modes"), r.opt_str("label")});
    });
    return spec;
}

DeviceSpec load_device(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    DeviceSpec spec = parse_device(buf.str(), path.string());
    auto violations = validate(spec);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return spec;
}

std::vector<std::string> validate(const DeviceSpec &spec) {
    std::vector<std::string> out;
    std::map<std::string, int> seen;
    for (const auto &q : spec.qudits) seen[q.label]++;
    for (const auto &m : spec.modes) seen[m.label]++;
    for (const auto &[label, n] : seen) {
        if (label.empty()) out.push_back("empty label on a qudit or mode");
        else if (n > 1) out.push_back("duplicate label '" + label + "'");
    }

    for (const auto &q : spec.qudits) {
        std::string who = "qudit '" + q.label + "'";
        if (q.levels < 2) out.push_back(who + ": levels = " + std::to_string(q.levels) + " (need >= 2)");
        if (!(q.omega_q_ghz > 0)) out.push_back(who + ": omega_q_ghz must be > 0");
        if (q.levels > 2 && q.delta_ghz == 0) out.push_back(who + ": delta_ghz must be nonzero when levels > 2");
    }
    for (const auto &m : spec.modes) {
        std::string who = "mode '" + m.label + "'";
        if (m.photons < 1) out.push_back(who + ": photons = " + std::to_string(m.photons) + " (need >= 1)");
        if (!(m.omega_r_ghz > 0)) out.push_back(who + ": omega_r_ghz must be > 0");
    }

    std::set<std::pair<std::string, std::string>> coupled;
    for (const auto &c : spec.couplings) {
        std::string who = "coupling " + c.qubit + "-" + c.mode;
        if (!spec.qudit_index(c.qubit)) out.push_back(who + ": unresolved qubit label '" + c.qubit + "'");
        if (!spec.mode_index(c.mode)) out.push_back(who + ": unresolved mode label '" + c.mode + "'");
        if (!coupled.insert({c.qubit, c.mode}).second) out.push_back(who + ": declared more than once");
    }
    for (const auto &d : spec.direct) {
        std::string who = "direct coupling " + d.qubit_a + "-" + d.qubit_b;
        if (d.qubit_a == d.qubit_b) out.push_back(who + ": a qubit cannot couple to itself");
        if (!spec.qudit_index(d.qubit_a)) out.push_back(who + ": unresolved qubit label '" + d.qubit_a + "'");
        if (!spec.qudit_index(d.qubit_b)) out.push_back(who + ": unresolved qubit label '" + d.qubit_b + "'");
    }
    std::set<std::string> pair_names;
    for (const auto &p : spec.pairs) {
        std::string who = "pair '" + p.name() + "'";
        if (!pair_names.insert(p.name()).second) out.push_back(who + ": duplicate pair name");
        if (p.qubit_a == p.qubit_b) out.push_back(who + ": both ends are the same qubit");
        if (!spec.qudit_index(p.qubit_a)) out.push_back(who + ": unresolved qubit label '" + p.qubit_a + "'");
        if (!spec.qudit_index(p.qubit_b)) out.push_back(who + ": unresolved qubit label '" + p.qubit_b + "'");
        if (p.modes.empty()) out.push_back(who + ": references no bus modes");
        std::set<std::string> ms;
        for (const auto &m : p.modes) {
            if (!spec.mode_index(m)) out.push_back(who + ": unresolved mode label '" + m + "'");
            if (!ms.insert(m).second) out.push_back(who + ": mode '" + m + "' listed twice");
        }
    }
    return out;
}

std::string serialize_device(const DeviceSpec &spec) {
    json root = json::object();
    if (!spec.name.empty()) root["name"] = spec.name;
    root["qudits"] = json::array();
    for (const auto &q : spec.qudits) {
        json e = {{"label", q.label}, {"omega_q_ghz", q.omega_q_ghz}, {"delta_ghz", q.delta_ghz}, {"levels", q.levels}};
        if (q.assumed) e["assumed"] = true;
        root["qudits"].push_back(e);
    }
    root["modes"] = json::array();
    for (const auto &m : spec.modes) {
        json e = {{"label", m.label}, {"omega_r_ghz", m.omega_r_ghz}, {"photons", m.photons}};
        if (m.assumed) e["assumed"] = true;
        root["modes"].push_back(e);
    }
    root["couplings"] = json::array();
    for (const auto &c : spec.couplings) {
        json e = {{"qubit", c.qubit}, {"mode", c.mode}, {"g_mhz", c.g_mhz}};
        if (c.assumed) e["assumed"] = true;
        root["couplings"].push_back(e);
    }
    root["direct"] = json::array();
    for (const auto &d : spec.direct) {
        json e = {{"a", d.qubit_a}, {"b", d.qubit_b}, {"j0_mhz", d.j0_mhz}};
        if (d.assumed) e["assumed"] = true;
        root["direct"].push_back(e);
    }
    root["pairs"] = json::array();
    for (const auto &p : spec.pairs) {
        json e = {{"a", p.qubit_a}, {"b", p.qubit_b}, {"modes", p.modes}};
        if (!p.label.empty()) e["label"] = p.label;
        root["pairs"].push_back(e);
    }
    return root.dump(2) + "\n";
}

DeviceSpec pair_subdevice(const DeviceSpec &spec, const PairSpec &pair) {
    DeviceSpec sub;
    sub.name = spec.name.empty() ? pair.name() : spec.name + ":" + pair.name();
    sub.qudits.push_back(spec.qudit(pair.qubit_a));
    sub.qudits.push_back(spec.qudit(pair.qubit_b));
    for (const auto &m : pair.modes) sub.modes.push_back(spec.mode(m));
    for (const auto &c : spec.couplings) {
        bool q = c.qubit == pair.qubit_a || c.qubit == pair.qubit_b;
        bool m = std::find(pair.modes.begin(), pair.modes.end(), c.mode) != pair.modes.end();
        if (q && m) sub.couplings.push_back(c);
    }
    for (const auto &d : spec.direct) {
        if ((d.qubit_a == pair.qubit_a && d.qubit_b == pair.qubit_b) ||
            (d.qubit_a == pair.qubit_b && d.qubit_b == pair.qubit_a)) {
            sub.direct.push_back(d);
        }
    }
    sub.pairs.push_back(pair);
    return sub;
}

void set_truncation(DeviceSpec &spec, int levels, int photons) {
    if (levels > 0) {
        for (auto &q : spec.qudits) q.levels = levels;
    }
    if (photons > 0) {
        for (auto &m : spec.modes) m.photons = photons;
    }
}

}  // namespace lbisim
