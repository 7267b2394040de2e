#include "cppunit/Exception.h"
#include "cppunit/Test.h"
#include "cppunit/TestFailure.h"

namespace CppUnit {

/// Constructs a TestFailure with the given test and exception.
TestFailure::TestFailure (Test *failedTest,
                          Exception *thrownException)
  : m_failedTest (failedTest),
    m_thrownException (thrownException)
{
}

/// Deletes the owned exception.
TestFailure::~TestFailure ()
{
  delete m_thrownException;
}

/// Gets the failed test.
Test *
TestFailure::failedTest ()
{
  return m_failedTest;
}


/// Gets the thrown exception.
Exception *
TestFailure::thrownException ()
{
  return m_thrownException;
}


/// Returns a short description of the failure.
std::string
TestFailure::toString () const
{
  return std::string ("failure");
}

} // namespace CppUnit
