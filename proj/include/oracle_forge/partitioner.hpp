#pragma once

#include <string>
#include <vector>

#include "oracle_forge/doc_model.hpp"

namespace oracle_forge {

/// One anchor method bundled with the in-document methods it references
/// through see-also. `related` follows the anchor's see-also order, without
/// duplicates and without the anchor itself.
struct PartitionUnit {
    std::string classFqcn;
    MethodDoc anchor;
    std::vector<MethodDoc> related;
    std::string renderedDescription;

    friend bool operator==(const PartitionUnit&, const PartitionUnit&) = default;

    /// `java.lang.Object#equals(Object)`; stable across runs.
    [[nodiscard]] std::string id() const;
};

/// Exactly one unit per method, in method order. Only the anchor's own
/// see-also list is followed (no transitive closure); references outside
/// the document are skipped. Throws AmbiguousReference.
std::vector<PartitionUnit> partition(const ClassDoc& doc);

/// Anchor description followed by each related description, separated by
/// one blank line.
std::string renderDescription(const PartitionUnit& unit);

/// Pseudo-unit covering the whole class, used to ablate partitioning: the
/// anchor is a synthetic method named after the class whose description is
/// every method description in order.
PartitionUnit wholeClassUnit(const ClassDoc& doc);

}  // namespace oracle_forge
