#include "funtag/tagset.hpp"

#include <array>
#include <unordered_set>

namespace funtag {

namespace {

constexpr std::array<std::string_view, kFunctionTagCount> kFunctionTagNames = {
    "Active", "Subj",    "PSubj",   "SubjP",    "Obj",   "PObj", "ObjP",
    "PIobj",  "IobjP",   "Pla",     "PPla",     "PlaP",  "Tim",  "PTim",
    "TimP",   "PExt",    "ExtP",    "PSim",     "SimP",  "PCom", "ComP",
    "POwn",   "OwnP",    "Ada",     "PcomplS",  "PcomplO", "PPcomplO",
    "PcomplOP", "PUse",  "UseP",    "Cau",      "PCau",  "CauP", "PAim",
    "AimP",   "CCS",     "CCM",     "CCC",      "CCP",   "CCA",  "Null",
};

constexpr std::array<std::string_view, kChunkTypeCount> kChunkTypeNames = {
    "NC", "PPC", "AC", "RC", "CC", "VC", "SFC",
};

constexpr std::array<std::string_view, kPosCount> kPosNames = {
    "n", "pron", "ppm", "adj", "adv", "cc", "part", "v", "sf",
};

// Category inventory. The source lists are explicitly non-exhaustive, so this
// only backs warnings.
const std::unordered_set<std::string_view> kKnownCategories = {
    "n.animal",        "n.food",         "n.body",       "n.person",
    "n.group",         "n.time",         "n.common",     "n.building",
    "n.location",      "n.objects",      "n.congnition",
    "pron.person",     "pron.distplace", "pron.disttime", "pron.possessive",
    "ppm.subj",        "ppm.obj",        "ppm.time",     "ppm.cause",
    "ppm.use",         "ppm.sim",        "ppm.aim",      "ppm.compare",
    "ppm.accept",      "ppm.place",      "ppm.extract",
    "adj.dem",         "adj.distobj",
    "adv.manner",      "adv.state",
    "cc.sent",         "cc.mean",        "cc.chunk",     "cc.part",
    "cc.adj",
    "part.type",       "part.eg",        "part.number",
    "v.common",        "v.compound",
    "sf.declarative",  "sf.question",    "sf.negative",
};

}  // namespace

std::string_view to_string(FunctionTag tag) {
  return kFunctionTagNames[static_cast<std::size_t>(tag)];
}

std::string_view to_string(ChunkType type) {
  return kChunkTypeNames[static_cast<std::size_t>(type)];
}

std::string_view to_string(Pos pos) {
  return kPosNames[static_cast<std::size_t>(pos)];
}

std::optional<FunctionTag> function_tag_from(std::string_view name) {
  for (std::size_t i = 0; i < kFunctionTagNames.size(); ++i) {
    if (kFunctionTagNames[i] == name) return static_cast<FunctionTag>(i);
  }
  return std::nullopt;
}

std::optional<ChunkType> chunk_type_from(std::string_view name) {
  for (std::size_t i = 0; i < kChunkTypeNames.size(); ++i) {
    if (kChunkTypeNames[i] == name) return static_cast<ChunkType>(i);
  }
  return std::nullopt;
}

std::optional<Pos> pos_from(std::string_view name) {
  if (name == "verb") return Pos::v;
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

bool known_category(std::string_view pos_dot_category) {
  return kKnownCategories.count(pos_dot_category) > 0;
}

}  // namespace funtag
