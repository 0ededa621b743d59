#include <doctest.h>

#include "dmeee/event_queue.hpp"

using Queue = dmeee::EventQueue<char>;

TEST_SUITE("event_queue") {

TEST_CASE("pops in time order") {
  Queue q;
  q.schedule(5.0, 'a');
  q.schedule(3.0, 'b');
  q.schedule(4.0, 'c');
  CHECK(q.pop()->payload == 'b');
  CHECK(q.pop()->payload == 'c');
  CHECK(q.pop()->payload == 'a');
  CHECK(!q.pop().has_value());
}

TEST_CASE("FIFO on equal timestamps") {
  Queue q;
  q.schedule(3.0, 'A');
  q.schedule(3.0, 'B');
  q.schedule(3.0, 'C');
  CHECK(q.pop()->payload == 'A');
  CHECK(q.pop()->payload == 'B');
  CHECK(q.pop()->payload == 'C');
}

TEST_CASE("lower priority wins ties regardless of insertion order") {
  Queue q;
  q.schedule(3.0, 't', 1);  // timer-like
  q.schedule(3.0, 'a', 0);  // arrival-like
  CHECK(q.pop()->payload == 'a');
  CHECK(q.pop()->payload == 't');
}

TEST_CASE("cancelled events never fire") {
  Queue q;
  const auto timer = q.schedule(7.0, 't');
  q.schedule(9.0, 'x');
  CHECK(q.cancel(timer));
  CHECK(!q.cancel(timer));   // second cancel is a no-op
  CHECK(!q.cancel(12345));   // unknown id
  CHECK(q.size() == 1);
  auto ev = q.pop();
  REQUIRE(ev.has_value());
  CHECK(ev->payload == 'x');
  CHECK(ev->time == 9.0);
  CHECK(q.empty());
}

TEST_CASE("popping an exhausted queue is clean") {
  Queue q;
  CHECK(q.empty());
  CHECK(!q.pop().has_value());
  CHECK(!q.pop().has_value());
}

}  // TEST_SUITE
