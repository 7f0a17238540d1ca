#include "ek/io.hpp"

#include "ek/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ek {

namespace {

using Json = nlohmann::ordered_json;

// Text lines with '#' comments stripped; blank lines dropped.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

long long parse_int_token(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InputError("expected integer for " + what + ", got '" + tok + "'");
    }
}

int parse_header(const std::string& line, const std::string& keyword) {
    std::istringstream is(line);
    std::string kw, count, extra;
    if (!(is >> kw >> count) || kw != keyword || (is >> extra))
        throw InputError("expected header '" + keyword + " <count>', got '" + line + "'");
    const long long n = parse_int_token(count, keyword);
    if (n < 1) throw InputError(keyword + " count must be >= 1");
    return static_cast<int>(n);
}

}  // namespace

WeightedTournament parse_tournament(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw InputError("empty tournament file");
    const int n = parse_header(lines[0], "n");
    WeightedTournament t(n);
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::istringstream is(lines[k]);
        std::string a, b, w, extra;
        if (!(is >> a >> b >> w) || (is >> extra))
            throw InputError("expected '<from> <to> <weight>', got '" + lines[k] + "'");
        const long long from = parse_int_token(a, "arc source");
        const long long to = parse_int_token(b, "arc target");
        const long long weight = parse_int_token(w, "arc weight");
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw InputError("arc endpoint out of range in '" + lines[k] + "'");
        if (from == to) throw InputError("self-loop arc on node " + std::to_string(from));
        if (weight < 1) throw InputError("arc weights must be positive in '" + lines[k] + "'");
        const int lo = static_cast<int>(std::min(from, to));
        const int hi = static_cast<int>(std::max(from, to));
        if (!seen.insert({lo, hi}).second)
            throw InputError("duplicate arc for pair {" + std::to_string(lo) + "," +
                             std::to_string(hi) + "}");
        t.set_margin(static_cast<int>(from), static_cast<int>(to), weight);
    }
    return t;
}

std::string serialize_tournament(const WeightedTournament& t) {
    std::ostringstream os;
    os << "n " << t.size() << "\n";
    for (int i = 0; i < t.size(); ++i)
        for (int j = i + 1; j < t.size(); ++j) {
            const long long m = t.margin(i, j);
            if (m > 0)
                os << i << " " << j << " " << m << "\n";
            else if (m < 0)
                os << j << " " << i << " " << -m << "\n";
        }
    return os.str();
}

Profile parse_profile(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw InputError("empty profile file");
    const int n = parse_header(lines[0], "candidates");
    Profile p;
    p.n_candidates = n;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto colon = lines[k].find(':');
        if (colon == std::string::npos)
            throw InputError("expected '<multiplicity> : <ranking>', got '" + lines[k] + "'");
        std::istringstream head(lines[k].substr(0, colon));
        std::string mult_tok, extra;
        if (!(head >> mult_tok) || (head >> extra))
            throw InputError("bad multiplicity in '" + lines[k] + "'");
        const long long mult = parse_int_token(mult_tok, "multiplicity");

        Ranking r;
        std::istringstream tail(lines[k].substr(colon + 1));
        std::string tok;
        bool expect_id = true;
        while (tail >> tok) {
            if (expect_id) {
                r.order.push_back(static_cast<int>(parse_int_token(tok, "candidate id")));
            } else if (tok != ">") {
                throw InputError("expected '>' between candidates, got '" + tok + "'");
            }
            expect_id = !expect_id;
        }
        if (expect_id) throw InputError("trailing '>' in '" + lines[k] + "'");
        p.entries.push_back({std::move(r), mult});
    }
    validate_profile(p);
    return p;
}

std::string serialize_profile(const Profile& p) {
    std::ostringstream os;
    os << "candidates " << p.n_candidates << "\n";
    for (const auto& e : p.entries) {
        os << e.multiplicity << " :";
        for (std::size_t i = 0; i < e.ranking.order.size(); ++i)
            os << (i == 0 ? " " : " > ") << e.ranking.order[i];
        os << "\n";
    }
    return os.str();
}

namespace {

Rational rational_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw InputError(std::string("embedding field '") + key + "' must be a \"p/q\" string");
    return parse_rational(j[key].get<std::string>());
}

long long multiplicity_field(const Json& j) {
    if (!j.contains("multiplicity") || !j["multiplicity"].is_number_integer())
        throw InputError("voter 'multiplicity' must be an integer");
    return j["multiplicity"].get<long long>();
}

std::string label_field(const Json& j) {
    if (!j.contains("label") || !j["label"].is_string())
        throw InputError("voter 'label' must be a string");
    return j["label"].get<std::string>();
}

std::map<int, std::string> parse_names(const Json& j) {
    std::map<int, std::string> names;
    if (!j.contains("names")) return names;
    if (!j["names"].is_object()) throw InputError("'names' must be an object of id -> string");
    for (const auto& [key, value] : j["names"].items()) {
        if (!value.is_string()) throw InputError("'names' values must be strings");
        names[static_cast<int>(parse_int_token(key, "name id"))] = value.get<std::string>();
    }
    return names;
}

}  // namespace

EmbeddingFile parse_embedding(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw InputError(std::string("embedding JSON: ") + ex.what());
    }
    if (!j.contains("norm") || !j["norm"].is_string())
        throw InputError("embedding needs a 'norm' field of l1|l2|linf");
    const std::string norm = j["norm"].get<std::string>();
    if (!j.contains("candidates") || !j["candidates"].is_array() || !j.contains("voters") ||
        !j["voters"].is_array())
        throw InputError("embedding needs 'candidates' and 'voters' arrays");

    EmbeddingFile file;
    file.names = parse_names(j);
    if (norm == "l2") {
        for (const auto& record : {j["candidates"], j["voters"]})
            for (const auto& item : record)
                if (item.contains("x") || item.contains("y"))
                    throw InputError(
                        "norm 'l2' is circular-only (angle records); planar x/y coordinates "
                        "support l1/linf");
        CircularEmbedding e;
        for (const auto& c : j["candidates"])
            e.candidates.push_back({c.value("id", -1), rational_field(c, "angle")});
        for (const auto& v : j["voters"]) {
            if (!v.contains("antipode") || !v["antipode"].is_boolean())
                throw InputError("l2 voter 'antipode' must be a boolean");
            e.voters.push_back({label_field(v), rational_field(v, "angle"),
                                v["antipode"].get<bool>(), multiplicity_field(v)});
        }
        validate_embedding(e);
        file.embedding = std::move(e);
    } else if (norm == "l1" || norm == "linf") {
        PlanarEmbedding e;
        e.norm = norm == "l1" ? Norm::L1 : Norm::Linf;
        for (const auto& c : j["candidates"])
            e.candidates.push_back(
                {c.value("id", -1), {rational_field(c, "x"), rational_field(c, "y")}});
        for (const auto& v : j["voters"])
            e.voters.push_back({label_field(v),
                                {rational_field(v, "x"), rational_field(v, "y")},
                                multiplicity_field(v)});
        validate_embedding(e);
        file.embedding = std::move(e);
    } else {
        throw InputError("unsupported norm '" + norm + "' (expected l1, l2 or linf)");
    }
    return file;
}

std::string serialize_embedding(const EmbeddingFile& e) {
    Json j;
    if (const auto* planar = std::get_if<PlanarEmbedding>(&e.embedding)) {
        j["norm"] = to_string(planar->norm);
        j["candidates"] = Json::array();
        for (const auto& c : planar->candidates)
            j["candidates"].push_back({{"id", c.id},
                                       {"x", rational_to_string(c.pos.x)},
                                       {"y", rational_to_string(c.pos.y)}});
        j["voters"] = Json::array();
        for (const auto& v : planar->voters)
            j["voters"].push_back({{"label", v.label},
                                   {"x", rational_to_string(v.pos.x)},
                                   {"y", rational_to_string(v.pos.y)},
                                   {"multiplicity", v.multiplicity}});
    } else {
        const auto& circ = std::get<CircularEmbedding>(e.embedding);
        j["norm"] = "l2";
        j["candidates"] = Json::array();
        for (const auto& c : circ.candidates)
            j["candidates"].push_back({{"id", c.id}, {"angle", rational_to_string(c.angle)}});
        j["voters"] = Json::array();
        for (const auto& v : circ.voters)
            j["voters"].push_back({{"label", v.label},
                                   {"angle", rational_to_string(v.angle)},
                                   {"antipode", v.antipode},
                                   {"multiplicity", v.multiplicity}});
    }
    if (!e.names.empty()) {
        Json names = Json::object();
        for (const auto& [id, name] : e.names) names[std::to_string(id)] = name;
        j["names"] = names;
    }
    return j.dump(2) + "\n";
}

FasInstance parse_fas(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw InputError("empty FAS file");
    FasInstance f;
    f.n = parse_header(lines[0], "n");
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::istringstream is(lines[k]);
        std::string a, b, extra;
        if (!(is >> a >> b) || (is >> extra))
            throw InputError("expected '<from> <to>', got '" + lines[k] + "'");
        f.arcs.emplace_back(static_cast<int>(parse_int_token(a, "arc source")),
                            static_cast<int>(parse_int_token(b, "arc target")));
    }
    validate_fas(f);
    return f;
}

std::string serialize_fas(const FasInstance& f) {
    std::ostringstream os;
    os << "n " << f.n << "\n";
    for (const auto& [u, v] : f.arcs) os << u << " " << v << "\n";
    return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << content;
}

}  // namespace ek
