#include "oracle_forge/partitioner.hpp"

#include <algorithm>

#include "oracle_forge/text.hpp"

namespace oracle_forge {

std::string PartitionUnit::id() const { return classFqcn + "#" + anchor.signature(); }

std::vector<PartitionUnit> partition(const ClassDoc& doc) {
    std::vector<PartitionUnit> units;
    units.reserve(doc.methods.size());
    for (std::size_t i = 0; i < doc.methods.size(); ++i) {
        PartitionUnit unit;
        unit.classFqcn = doc.fqcn;
        unit.anchor = doc.methods[i];
        std::vector<std::size_t> taken;
        for (const auto& ref : unit.anchor.seeAlso) {
            const auto idx = resolveSeeAlsoIndex(doc, ref);
            if (!idx || *idx == i) continue;
            if (std::find(taken.begin(), taken.end(), *idx) != taken.end()) continue;
            taken.push_back(*idx);
            unit.related.push_back(doc.methods[*idx]);
        }
        unit.renderedDescription = renderDescription(unit);
        units.push_back(std::move(unit));
    }
    return units;
}

std::string renderDescription(const PartitionUnit& unit) {
    std::string out = unit.anchor.description;
    for (const auto& r : unit.related) {
        out += "\n\n";
        out += r.description;
    }
    return out;
}

PartitionUnit wholeClassUnit(const ClassDoc& doc) {
    PartitionUnit unit;
    unit.classFqcn = doc.fqcn;
    unit.anchor.name = doc.simpleName();
    unit.anchor.returnType = "void";
    std::vector<std::string> parts;
    for (const auto& m : doc.methods) {
        if (!m.description.empty()) parts.push_back(m.description);
        unit.anchor.throwsTags.insert(unit.anchor.throwsTags.end(), m.throwsTags.begin(), m.throwsTags.end());
    }
    unit.anchor.description = text::join(parts, "\n\n");
    unit.renderedDescription = renderDescription(unit);
    return unit;
}

}  // namespace oracle_forge
