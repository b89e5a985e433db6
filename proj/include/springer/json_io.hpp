#pragma once

#include "json.hpp"
#include "springer/check_line.hpp"
#include "springer/exceptional.hpp"
#include "springer/jinduction.hpp"
#include "springer/oracle.hpp"
#include "springer/springer_map.hpp"
#include "springer/theorem.hpp"

namespace springer {

inline constexpr int kOutputSchemaVersion = 1;

nlohmann::json to_json(const IrrLabel& l);
// Accepts {"family", "partition"} for A, {"family", "top", "bottom", "kappa"}
// for BC/D, or explicit rows {"family", "z", "zp", "kappa"}.
IrrLabel label_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpecialRep& s);
nlohmann::json to_json(const ClassLabel& c);
nlohmann::json to_json(const ParahoricSpec& p);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const VerifyRecord& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const CheckLine& l);
nlohmann::json to_json(const exceptional::ExceptionalRow& r);
nlohmann::json to_json(const exceptional::RowFinding& f);
nlohmann::json to_json(const oracle::CharacterTable& t);

}  // namespace springer
