#include "twopart/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace twopart {

using nlohmann::json;

namespace {

json family_sets_json(const SetFamily& f) {
    json sets = json::array();
    for (SubsetMask m : f.masks) {
        json one = json::array();
        for (int e = 0; e < f.n; ++e)
            if (m >> e & 1) one.push_back(e);
        sets.push_back(std::move(one));
    }
    return sets;
}

SetFamily family_from_sets_json(const json& sets, int n) {
    std::vector<SubsetMask> masks;
    for (const auto& one : sets) {
        SubsetMask m = 0;
        for (const auto& e : one) {
            const long long id = e.get<long long>();
            if (id < 0 || id >= n) throw std::invalid_argument("set element outside [0,n)");
            m |= SubsetMask{1} << id;
        }
        masks.push_back(m);
    }
    return normalize_family(std::move(masks), n);
}

int json_ground_size(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("missing integer field \"n\"");
    const long long n = j["n"].get<long long>();
    if (n < 0 || n > kMaxGroundSize) throw std::invalid_argument("\"n\" out of range");
    return static_cast<int>(n);
}

}  // namespace

std::string family_to_json(const SetFamily& f, std::optional<int> k) {
    json j;
    j["n"] = f.n;
    j["k"] = k.has_value() ? json(*k) : json(nullptr);
    j["sets"] = family_sets_json(f);
    return j.dump();
}

std::string family_to_compact(const SetFamily& f, std::optional<int> k) {
    std::ostringstream out;
    out << "n=" << f.n;
    if (k.has_value()) out << " k=" << *k;
    out << '\n';
    out << std::hex;
    for (SubsetMask m : f.masks) out << m << '\n';
    return out.str();
}

FamilyFile parse_family(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty family file");
    FamilyFile out;
    if (text[first] == '{') {
        json j = json::parse(text);
        const int n = json_ground_size(j);
        if (j.contains("k") && !j["k"].is_null()) {
            const long long k = j["k"].get<long long>();
            if (k < 0 || k > n) throw std::invalid_argument("\"k\" out of range");
            out.k = static_cast<int>(k);
        }
        if (!j.contains("sets") || !j["sets"].is_array())
            throw std::invalid_argument("missing \"sets\" array");
        out.family = family_from_sets_json(j["sets"], n);
        return out;
    }
    // compact form
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty family file");
    int n = -1;
    long long k = -1;
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
        if (tok.rfind("n=", 0) == 0)
            n = std::stoi(tok.substr(2));
        else if (tok.rfind("k=", 0) == 0)
            k = std::stoll(tok.substr(2));
        else
            throw std::invalid_argument("bad header token: " + tok);
    }
    if (n < 0 || n > kMaxGroundSize) throw std::invalid_argument("bad or missing n= header");
    if (k >= 0) {
        if (k > n) throw std::invalid_argument("k= out of range");
        out.k = static_cast<int>(k);
    }
    std::vector<SubsetMask> masks;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        masks.push_back(std::stoull(line, nullptr, 16));
    }
    out.family = normalize_family(std::move(masks), n);
    return out;
}

std::string partition_to_json(const LabeledPartition& p) {
    json j;
    j["n"] = p.n;
    json classes = json::array();
    for (const auto& c : p.classes)
        classes.push_back(json{{"label", c.label}, {"sets", family_sets_json(c.family)}});
    j["classes"] = std::move(classes);
    return j.dump();
}

LabeledPartition parse_partition(const std::string& text) {
    json j = json::parse(text);
    LabeledPartition p;
    p.n = json_ground_size(j);
    if (!j.contains("classes") || !j["classes"].is_array())
        throw std::invalid_argument("missing \"classes\" array");
    for (const auto& c : j["classes"]) {
        if (!c.contains("label") || !c["label"].is_string())
            throw std::invalid_argument("class missing \"label\"");
        LabeledClass cls;
        cls.label = c["label"].get<std::string>();
        cls.family = family_from_sets_json(c.at("sets"), p.n);
        p.classes.push_back(std::move(cls));
    }
    if (!p.check_valid()) throw std::invalid_argument("partition classes are not disjoint");
    // completeness is a property of the content, not a stored flag
    std::size_t total = 0;
    for (const auto& c : p.classes) total += c.family.size();
    p.complete = p.n <= materialization_limit() && total == (std::size_t{1} << p.n);
    return p;
}

std::string pair_to_json(const FamilyPair& p) {
    LabeledPartition part;
    part.n = p.first.n;
    part.classes.push_back({"F", p.first});
    part.classes.push_back({"G", p.second});
    json j;
    j["n"] = part.n;
    json classes = json::array();
    for (const auto& c : part.classes)
        classes.push_back(json{{"label", c.label}, {"sets", family_sets_json(c.family)}});
    j["classes"] = std::move(classes);
    return j.dump();
}

FamilyPair parse_pair(const std::string& text) {
    json j = json::parse(text);
    const int n = json_ground_size(j);
    if (!j.contains("classes") || !j["classes"].is_array() || j["classes"].size() != 2)
        throw std::invalid_argument("pair file needs exactly two classes");
    SetFamily f = family_from_sets_json(j["classes"][0].at("sets"), n);
    SetFamily g = family_from_sets_json(j["classes"][1].at("sets"), n);
    return FamilyPair(std::move(f), std::move(g));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

}  // namespace twopart
