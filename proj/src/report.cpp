#include "halg/report.hpp"

#include <exception>

namespace halg {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
        case Status::error: return "error";
    }
    return "error";
}

CheckItem& CheckReport::run(const std::string& id, const std::string& statement, const Body& body) {
    CheckItem item{id, statement, Status::pass, {}, {}};
    try {
        if (auto w = body()) {
            item.status = Status::fail;
            item.witness = *w;
        }
    } catch (const std::exception& e) {
        item.status = Status::error;
        item.witness = e.what();
    }
    items.push_back(std::move(item));
    return items.back();
}

CheckItem& CheckReport::add(const std::string& id, const std::string& statement, Status s, std::string witness) {
    items.push_back({id, statement, s, std::move(witness), {}});
    return items.back();
}

void CheckReport::skip(const std::string& id, const std::string& statement, const std::string& why) {
    add(id, statement, Status::skip, why);
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
    for (auto item : other.items) {
        item.id = prefix + item.id;
        items.push_back(std::move(item));
    }
    seconds += other.seconds;
}

bool CheckReport::ok() const {
    for (const auto& i : items)
        if (i.status == Status::fail || i.status == Status::error) return false;
    return true;
}

bool CheckReport::errored() const {
    for (const auto& i : items)
        if (i.status == Status::error) return true;
    return false;
}

const CheckItem* CheckReport::find(const std::string& id) const {
    for (const auto& i : items)
        if (i.id == id) return &i;
    return nullptr;
}

bool CheckReport::passed(const std::string& id) const {
    const CheckItem* i = find(id);
    return i && i->status == Status::pass;
}

std::vector<std::string> CheckReport::failing() const {
    std::vector<std::string> out;
    for (const auto& i : items)
        if (i.status == Status::fail) out.push_back(i.id);
    return out;
}

}  // namespace halg
