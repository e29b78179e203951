#include "confspace/config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "confspace/errors.hpp"

namespace confspace {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ParseError("unknown key '" + key + "' in " + where);
    }
}

const json& require_key(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(where + " needs a '" + key + "' field");
    return j.at(key);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

} // namespace

RunConfig config_from_json_text(const std::string& text) try {
    const json j = parse_json(text, "config");
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    reject_unknown_keys(j, {"manifold", "window"}, "config");
    if (!j.contains("manifold")) throw ParseError("config needs a 'manifold' object");
    if (!j.contains("window") || !j["window"].is_number_integer())
        throw ParseError("config needs an integer 'window'");

    const json& m = j["manifold"];
    if (!m.is_object()) throw ParseError("'manifold' must be an object");
    reject_unknown_keys(m, {"hat_rank", "p3", "p4", "p5", "c3", "c4"}, "manifold");

    ManifoldSpec spec;
    spec.window = j["window"].get<int>();
    if (!m.contains("hat_rank") || !m["hat_rank"].is_number_integer())
        throw ParseError("manifold needs an integer 'hat_rank'");
    spec.group.hat_rank = m["hat_rank"].get<int>();

    if (m.contains("p3")) {
        if (!m["p3"].is_array()) throw ParseError("'p3' must be an array");
        for (const json& e : m["p3"]) {
            if (e.is_string()) {
                spec.p3.push_back(Primitive3{e.get<std::string>(), false});
                continue;
            }
            if (!e.is_object()) throw ParseError("'p3' entries are names or {name, fiber}");
            reject_unknown_keys(e, {"name", "fiber"}, "p3 entry");
            Primitive3 p;
            p.name = require_key(e, "name", "p3 entry").get<std::string>();
            if (e.contains("fiber")) p.fiber = e.at("fiber").get<bool>();
            spec.p3.push_back(std::move(p));
        }
    }
    auto read_names = [](const json& arr, const char* what) {
        if (!arr.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
        std::vector<std::string> out;
        for (const json& e : arr) {
            if (!e.is_string()) throw ParseError(std::string("'") + what + "' entries are strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    };
    if (m.contains("p4")) spec.p4 = read_names(m["p4"], "p4");
    if (m.contains("p5")) spec.p5 = read_names(m["p5"], "p5");

    if (m.contains("c3")) {
        if (!m["c3"].is_object()) throw ParseError("'c3' must map primitive names to term lists");
        for (const auto& [name, arr] : m["c3"].items()) {
            if (!arr.is_array()) throw ParseError("c3 terms must be an array");
            std::vector<C3Term> terms;
            for (const json& t : arr) {
                reject_unknown_keys(t, {"coeff", "gamma"}, "c3 term");
                C3Term term;
                term.coeff = rat_parse(require_key(t, "coeff", "c3 term").get<std::string>());
                term.gamma = word_parse(spec.group, require_key(t, "gamma", "c3 term").get<std::string>());
                terms.push_back(std::move(term));
            }
            spec.c3.emplace(name, std::move(terms));
        }
    }
    if (m.contains("c4")) {
        if (!m["c4"].is_object()) throw ParseError("'c4' must map primitive names to term lists");
        for (const auto& [name, arr] : m["c4"].items()) {
            if (!arr.is_array()) throw ParseError("c4 terms must be an array");
            std::vector<C4Term> terms;
            for (const json& t : arr) {
                reject_unknown_keys(t, {"coeff", "slot", "word", "prim"}, "c4 term");
                C4Term term;
                term.coeff = rat_parse(require_key(t, "coeff", "c4 term").get<std::string>());
                term.slot = require_key(t, "slot", "c4 term").get<int>();
                term.g = word_parse(spec.group, require_key(t, "word", "c4 term").get<std::string>());
                term.prim = require_key(t, "prim", "c4 term").get<std::string>();
                terms.push_back(std::move(term));
            }
            spec.c4.emplace(name, std::move(terms));
        }
    }

    spec.validate();
    RunConfig rc;
    rc.manifold = std::move(spec);
    rc.config_hash = config_hash_of(rc.manifold);
    return rc;
} catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
}

RunConfig load_config(const std::string& path) { return config_from_json_text(read_file(path)); }

std::string canonical_config_json(const ManifoldSpec& spec) {
    json m;
    m["hat_rank"] = spec.group.hat_rank;
    m["p3"] = json::array();
    for (const auto& p : spec.p3) m["p3"].push_back({{"fiber", p.fiber}, {"name", p.name}});
    m["p4"] = spec.p4;
    m["p5"] = spec.p5;
    m["c3"] = json::object();
    for (const auto& [name, terms] : spec.c3) {
        json arr = json::array();
        for (const auto& t : terms)
            arr.push_back({{"coeff", rat_str(t.coeff)}, {"gamma", word_str(t.gamma)}});
        m["c3"][name] = arr;
    }
    m["c4"] = json::object();
    for (const auto& [name, terms] : spec.c4) {
        json arr = json::array();
        for (const auto& t : terms)
            arr.push_back({{"coeff", rat_str(t.coeff)},
                           {"prim", t.prim},
                           {"slot", t.slot},
                           {"word", word_str(t.g)}});
        m["c4"][name] = arr;
    }
    json root;
    root["manifold"] = m;
    root["window"] = spec.window;
    return root.dump();
}

std::string config_hash_of(const ManifoldSpec& spec) {
    const std::string canon = canonical_config_json(spec);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::vector<SymVec> classes_from_json_text(const std::string& text, const ManifoldSpec& spec) try {
    const json j = parse_json(text, "classes file");
    if (!j.is_array()) throw ParseError("classes file must be a JSON array");
    std::vector<SymVec> out;
    for (const json& e : j) {
        if (!e.is_object()) throw ParseError("classes entries are {coeff, symbol} objects");
        reject_unknown_keys(e, {"coeff", "symbol"}, "classes entry");
        const Rat c = rat_parse(require_key(e, "coeff", "classes entry").get<std::string>());
        const BasisSymbol s = symbol_parse(spec, require_key(e, "symbol", "classes entry").get<std::string>());
        out.push_back(sym_single(s, c));
    }
    return out;
} catch (const json::exception& e) {
    throw ParseError(std::string("classes file: ") + e.what());
}

std::vector<SymVec> load_classes(const std::string& path, const ManifoldSpec& spec) {
    return classes_from_json_text(read_file(path), spec);
}

int thread_cap() {
    if (const char* env = std::getenv("CONFSPACE_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(thread_cap(), n == 0 ? 1 : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n) return;
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace confspace
