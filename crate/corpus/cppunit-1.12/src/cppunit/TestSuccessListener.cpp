#include <cppunit/TestSuccessListener.h>


namespace CppUnit {


TestSuccessListener::TestSuccessListener()
    : m_success( true )
{
}


TestSuccessListener::~TestSuccessListener()
{
}


void
TestSuccessListener::reset()
{
  m_success = true;
}


void
TestSuccessListener::addFailure( const TestFailure & /*failure*/ )
{
  m_success = false;
}


bool
TestSuccessListener::wasSuccessful() const
{
  return m_success;
}


} // namespace CppUnit
