#include <cppunit/TestFailure.h>
#include <cppunit/TestResultCollector.h>


namespace CppUnit {


TestResultCollector::TestResultCollector()
    : m_testErrors( 0 )
{
  reset();
}


TestResultCollector::~TestResultCollector()
{
  freeFailures();
}


void
TestResultCollector::freeFailures()
{
  TestFailures::iterator itFailure = m_failures.begin();
  while ( itFailure != m_failures.end() )
    delete *itFailure++;
  m_failures.clear();
}


void
TestResultCollector::reset()
{
  TestSuccessListener::reset();

  freeFailures();
  m_testErrors = 0;
  m_tests.clear();
}


void
TestResultCollector::startTest( Test *test )
{
  m_tests.push_back( test );
}


void
TestResultCollector::addFailure( const TestFailure &failure )
{
  TestSuccessListener::addFailure( failure );

  if ( failure.isError() )
    ++m_testErrors;
  m_failures.push_back( failure.clone() );
}


/// Gets the number of run tests.
int
TestResultCollector::runTests() const
{
  return m_tests.size();
}


/// Gets the number of detected errors (uncaught exception).
int
TestResultCollector::testErrors() const
{
  return m_testErrors;
}


/// Gets the number of detected failures (failed assertion).
int
TestResultCollector::testFailures() const
{
  return m_failures.size() - m_testErrors;
}


/// Gets the total number of detected failures.
int
TestResultCollector::testFailuresTotal() const
{
  return m_failures.size();
}


/// Returns a the list failures (random access collection).
const TestResultCollector::TestFailures &
TestResultCollector::failures() const
{
  return m_failures;
}


const TestResultCollector::Tests &
TestResultCollector::tests() const
{
  return m_tests;
}


} // namespace CppUnit
