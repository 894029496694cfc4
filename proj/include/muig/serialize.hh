#ifndef MUIG_SERIALIZE_HH
#define MUIG_SERIALIZE_HH

#include <muig/builder.hh>
#include <muig/catalog.hh>
#include <muig/census.hh>
#include <muig/interval.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace muig
{
    /// {"0": {"lo": "p/q", "hi": "p/q", "type": "closed"}, ...}
    auto representation_to_json(const Representation & rep) -> nlohmann::ordered_json;

    /// Accepts a bare representation object or any object with a
    /// "representation" member. Keys must be exactly "0".."n-1".
    /// Throws ParseError.
    auto representation_from_json(std::string_view text) -> Representation;

    auto embedding_to_json(const Embedding & e) -> nlohmann::ordered_json;
    auto certificate_to_json(const Certificate & c) -> nlohmann::ordered_json;
    auto census_to_json(const CensusReport & r) -> nlohmann::ordered_json;

    /// Human-readable aggregate table.
    auto census_summary(const CensusReport & r) -> std::string;
}

#endif
