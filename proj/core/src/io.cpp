#include "teachdim/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "teachdim/constructions.hpp"

namespace teachdim {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void line_error(std::size_t lineno, const std::string& what) {
    throw InputError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

ClassPtr parse_hc(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;

    int n = -1;
    std::vector<std::string> instance_names;
    std::vector<std::string> hyp_names;
    std::vector<std::vector<int>> rows;
    std::map<std::vector<int>, std::size_t> row_lines;

    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.resize(hash_pos);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "instances") {
            if (n >= 0) line_error(lineno, "duplicate instances line");
            if (tokens.size() != 2) line_error(lineno, "expected: instances <n>");
            try {
                n = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                line_error(lineno, "instance count is not a number");
            }
            if (n < 1) line_error(lineno, "instance count must be positive");
            continue;
        }
        if (tokens[0] == "instance-names") {
            if (n < 0) line_error(lineno, "instance-names before instances");
            if (static_cast<int>(tokens.size()) - 1 != n)
                line_error(lineno, "expected " + std::to_string(n) + " instance names");
            instance_names.assign(tokens.begin() + 1, tokens.end());
            continue;
        }

        // Hypothesis line: "<name>: b1 b2 ... bn".
        if (n < 0) line_error(lineno, "hypothesis row before instances line");
        if (tokens[0].empty() || tokens[0].back() != ':')
            line_error(lineno, "expected '<name>: <bits>'");
        std::string name = tokens[0].substr(0, tokens[0].size() - 1);
        if (name.empty()) line_error(lineno, "empty hypothesis name");
        if (static_cast<int>(tokens.size()) - 1 != n)
            line_error(lineno, "expected " + std::to_string(n) + " labels, got " +
                                   std::to_string(tokens.size() - 1));
        std::vector<int> row;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (tokens[i] == "0")
                row.push_back(0);
            else if (tokens[i] == "1")
                row.push_back(1);
            else
                line_error(lineno, "label token '" + tokens[i] + "' is not a bit");
        }
        auto [it, inserted] = row_lines.emplace(row, lineno);
        if (!inserted)
            line_error(lineno, "duplicate hypothesis row (first seen on line " +
                                   std::to_string(it->second) + ")");
        rows.push_back(std::move(row));
        hyp_names.push_back(std::move(name));
    }
    if (n < 0) throw InputError("missing instances line");
    if (rows.empty()) throw InputError("no hypothesis rows");
    return std::make_shared<HypothesisClass>(std::move(rows), std::move(instance_names),
                                             std::move(hyp_names));
}

ClassPtr load_hc(const std::string& path) {
    try {
        return parse_hc(read_text_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string canonical_hc_text(const HypothesisClass& cls) {
    std::ostringstream os;
    os << "instances " << cls.instance_count() << "\n";
    os << "instance-names";
    for (int x = 0; x < cls.instance_count(); ++x) os << " " << cls.instance_name(x);
    os << "\n";
    for (int h = 0; h < cls.hypothesis_count(); ++h) {
        os << cls.hypothesis_name(h) << ":";
        for (int x = 0; x < cls.instance_count(); ++x) os << " " << cls.label(h, x);
        os << "\n";
    }
    return os.str();
}

void save_hc(const HypothesisClass& cls, const std::string& path) {
    write_text_file(path, canonical_hc_text(cls));
}

std::string class_hash(const HypothesisClass& cls) {
    const std::string text = canonical_hc_text(cls);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Json pattern_to_json(const VersionSpacePattern& p) {
    Json j;
    j["required"] = p.required.elements();
    j["optional"] = p.optional.elements();
    return j;
}

VersionSpacePattern pattern_from_json(const Json& j, int m) {
    VersionSpacePattern p;
    p.required = IndexSet(static_cast<std::size_t>(m));
    p.optional = IndexSet(static_cast<std::size_t>(m));
    for (const auto& v : j.at("required")) {
        const auto i = v.get<std::size_t>();
        if (i >= static_cast<std::size_t>(m)) throw InputError("pattern index out of range");
        p.required.insert(i);
    }
    for (const auto& v : j.at("optional")) {
        const auto i = v.get<std::size_t>();
        if (i >= static_cast<std::size_t>(m)) throw InputError("pattern index out of range");
        p.optional.insert(i);
    }
    return p;
}

}  // namespace

std::string pref_to_json(const PreferenceFunction& sigma) {
    if (sigma.is_composite())
        throw InputError("composite preference functions must be materialized before saving");

    Json j;
    j["family"] = to_string(sigma.family());
    j["class_hash"] = class_hash(*sigma.bound_class());
    j["default_rank"] = sigma.default_rank();
    switch (sigma.family()) {
        case PrefFamily::kConst:
            j["entries"] = Json{{"c", sigma.const_value()}};
            break;
        case PrefFamily::kGlobal:
            j["entries"] = Json{{"ranks", sigma.global_ranks()}};
            break;
        case PrefFamily::kLocal:
            if (sigma.is_hamming_local())
                j["entries"] = Json{{"hamming", true}};
            else
                j["entries"] = Json{{"matrix", sigma.local_ranks()}};
            break;
        case PrefFamily::kGvs: {
            Json entries = Json::array();
            for (const auto& e : sigma.gvs_entries()) {
                Json je;
                je["pattern"] = pattern_to_json(e.pattern);
                je["ranks"] = e.ranks;
                entries.push_back(std::move(je));
            }
            j["entries"] = std::move(entries);
            break;
        }
        case PrefFamily::kLvs: {
            Json entries = Json::array();
            for (const auto& e : sigma.lvs_entries()) {
                Json je;
                if (e.current < 0)
                    je["current"] = nullptr;
                else
                    je["current"] = e.current;
                je["pattern"] = pattern_to_json(e.pattern);
                je["ranks"] = e.ranks;
                entries.push_back(std::move(je));
            }
            j["entries"] = std::move(entries);
            break;
        }
    }
    return j.dump(2) + "\n";
}

PreferenceFunction parse_pref(const std::string& json_text, ClassPtr cls) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed .pref JSON: ") + e.what());
    }
    try {
        const std::string family_tag = j.at("family").get<std::string>();
        const auto family = pref_family_from_string(family_tag);
        if (!family) throw InputError("unknown family '" + family_tag + "'");
        const std::string expected = j.at("class_hash").get<std::string>();
        if (expected != class_hash(*cls))
            throw InputError("class_hash mismatch: file is bound to a different class");
        const Rank default_rank = j.at("default_rank").get<Rank>();
        const int m = cls->hypothesis_count();
        const Json& entries = j.at("entries");

        switch (*family) {
            case PrefFamily::kConst:
                return build_const(std::move(cls), entries.at("c").get<Rank>());
            case PrefFamily::kGlobal:
                return build_global(std::move(cls), entries.at("ranks").get<std::vector<Rank>>());
            case PrefFamily::kLocal:
                if (entries.contains("hamming") && entries.at("hamming").get<bool>())
                    return build_local_hamming(std::move(cls));
                return build_local_table(std::move(cls),
                                         entries.at("matrix").get<std::vector<std::vector<Rank>>>());
            case PrefFamily::kGvs: {
                std::vector<GvsEntry> list;
                for (const auto& je : entries) {
                    GvsEntry e;
                    e.pattern = pattern_from_json(je.at("pattern"), m);
                    e.ranks = je.at("ranks").get<std::vector<Rank>>();
                    list.push_back(std::move(e));
                }
                return build_gvs(std::move(cls), std::move(list), default_rank);
            }
            case PrefFamily::kLvs: {
                std::vector<LvsEntry> list;
                for (const auto& je : entries) {
                    LvsEntry e;
                    e.current = je.at("current").is_null() ? -1 : je.at("current").get<int>();
                    e.pattern = pattern_from_json(je.at("pattern"), m);
                    e.ranks = je.at("ranks").get<std::vector<Rank>>();
                    list.push_back(std::move(e));
                }
                return build_lvs(std::move(cls), std::move(list), default_rank);
            }
        }
        throw InputError("unreachable family");
    } catch (const Json::exception& e) {
        throw InputError(std::string(".pref structure error: ") + e.what());
    }
}

void save_pref(const PreferenceFunction& sigma, const std::string& path, const Budget& budget) {
    if (sigma.is_composite()) {
        write_text_file(path, pref_to_json(materialize_lvs(sigma, budget)));
        return;
    }
    write_text_file(path, pref_to_json(sigma));
}

PreferenceFunction load_pref(const std::string& path, ClassPtr cls) {
    try {
        return parse_pref(read_text_file(path), std::move(cls));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

}  // namespace teachdim
