#pragma once

// File formats. Families travel as JSON {"n":..,"k":..,"sets":[[ids]..]}
// with sets ordered by mask value, or as a compact text form with an
// "n=<n> k=<k>" header followed by one lowercase hex mask per line.
// Partitions (and family pairs, stored as two labeled classes) use
// {"n":..,"classes":[{"label":..,"sets":..}..]}. Exact values are never
// rounded; parsing re-normalizes and round-trips bit-exactly.

#include "twopart/core.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace twopart {

struct FamilyFile {
    SetFamily family;
    std::optional<int> k;  // split position if the family carries one
};

std::string family_to_json(const SetFamily& f, std::optional<int> k);
std::string family_to_compact(const SetFamily& f, std::optional<int> k);
FamilyFile parse_family(const std::string& text);  // sniffs JSON vs compact

std::string partition_to_json(const LabeledPartition& p);
LabeledPartition parse_partition(const std::string& text);

// Pair files are partition files with exactly two classes, F then G.
std::string pair_to_json(const FamilyPair& p);
FamilyPair parse_pair(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace twopart
