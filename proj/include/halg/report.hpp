#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace halg {

enum class Status { pass, fail, skip, error };

const char* status_name(Status s);

struct CheckItem {
    std::string id;
    std::string statement;
    Status status = Status::pass;
    std::string witness;
    std::string detail;  // informational output, e.g. computed dimensions
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;
    double seconds = 0;

    // A check body returns nothing on success or a witness on failure.
    using Body = std::function<std::optional<std::string>()>;

    CheckItem& run(const std::string& id, const std::string& statement, const Body& body);
    CheckItem& add(const std::string& id, const std::string& statement, Status s, std::string witness = {});
    void skip(const std::string& id, const std::string& statement, const std::string& why);
    void append(const CheckReport& other, const std::string& prefix = {});

    bool ok() const;
    bool errored() const;
    const CheckItem* find(const std::string& id) const;
    bool passed(const std::string& id) const;
    std::vector<std::string> failing() const;
};

}  // namespace halg
