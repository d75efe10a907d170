#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace qtrefftz {

/// Thread-safe memo table. Each key is computed exactly once (the first
/// caller runs the factory, concurrent callers for the same key wait), and
/// stored values are never mutated afterwards, so references stay valid and
/// may be shared freely.
template <typename Key, typename Value>
class Memo
{
public:
  template <typename Factory>
  const Value& get(const Key& key, Factory&& make)
  {
    Entry* entry = nullptr;
    {
      std::lock_guard lock(mutex_);
      auto& slot = entries_[key];
      if (!slot)
        slot = std::make_unique<Entry>();
      entry = slot.get();
    }
    std::call_once(entry->once, [&] { entry->value = std::make_unique<const Value>(make()); });
    return *entry->value;
  }

private:
  struct Entry
  {
    std::once_flag once;
    std::unique_ptr<const Value> value;
  };

  std::mutex mutex_;
  std::map<Key, std::unique_ptr<Entry>> entries_;
};

} // namespace qtrefftz
