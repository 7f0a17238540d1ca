#pragma once

#include "ek/core.hpp"
#include "ek/geometry.hpp"
#include "ek/pipeline.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <variant>

namespace ek {

// Embedding file payload: the geometry plus an optional display-name map
// (names never influence derivation; ids are the identity everywhere).
struct EmbeddingFile {
    std::variant<PlanarEmbedding, CircularEmbedding> embedding;
    std::map<int, std::string> names;

    bool operator==(const EmbeddingFile&) const = default;
};

// Tournament text format: header "n <count>", one "from to weight" line per
// arc (0-based ids, positive weights), '#' comments. Duplicate pairs in
// either direction are a parse error.
WeightedTournament parse_tournament(const std::string& text);
std::string serialize_tournament(const WeightedTournament& t);

// Profile text format: header "candidates <n>", then one
// "<multiplicity> : <id> > <id> > ..." line per entry.
Profile parse_profile(const std::string& text);
std::string serialize_profile(const Profile& p);

// Embedding JSON: "norm" of "l1"/"linf" with candidate/voter x,y rationals
// as "p/q" strings, or "l2" with angle rationals plus antipode flags.
// Floats never appear; parse(serialize(e)) == e on canonical form.
EmbeddingFile parse_embedding(const std::string& json_text);
std::string serialize_embedding(const EmbeddingFile& e);

// FAS text format: header "n <count>", one "from to" line per arc,
// '#' comments. Repeated identical arcs are allowed (counted per arc).
FasInstance parse_fas(const std::string& text);
std::string serialize_fas(const FasInstance& f);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ek
