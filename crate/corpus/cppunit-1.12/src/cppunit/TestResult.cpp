#include <cppunit/Test.h>
#include <cppunit/TestFailure.h>
#include <cppunit/TestListener.h>
#include <cppunit/TestResult.h>
#include <cppunit/DefaultProtector.h>
#include <cppunit/ProtectorContext.h>
#include <algorithm>

namespace CppUnit {

/// Construct a TestResult
TestResult::TestResult()
    : m_protectorChain( new DefaultProtector() )
    , m_stop( false )
{
}


/// Destroys a test result
TestResult::~TestResult()
{
  delete m_protectorChain;
}


/** Resets the result for a new run.
 *
 * Clear the previous run result.
 */
void
TestResult::reset()
{
  m_stop = false;
}


/** Adds an error to the list of errors.
 *  The passed in exception
 *  caused the error
 */
void
TestResult::addError( Test *test,
                      Exception *e )
{
  TestFailure failure( test, e, true );
  addFailure( failure );
}


/** Adds a failure to the list of failures. The passed in exception
 * caused the failure.
 */
void
TestResult::addFailure( Test *test, Exception *e )
{
  TestFailure failure( test, e, false );
  addFailure( failure );
}


/** Called to add a failure to the list of failures.
 */
void
TestResult::addFailure( const TestFailure &failure )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->addFailure( failure );
}


/// Informs the result that a test will be started.
void
TestResult::startTest( Test *test )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->startTest( test );
}


/// Informs the result that a test was completed.
void
TestResult::endTest( Test *test )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->endTest( test );
}


/// Informs the result that a test suite will be started.
void
TestResult::startSuite( Test *test )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->startSuite( test );
}


/// Informs the result that a test suite was completed.
void
TestResult::endSuite( Test *test )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->endSuite( test );
}


/// Returns whether testing should be stopped
bool
TestResult::shouldStop() const
{
  return m_stop;
}


/// Stop testing
void
TestResult::stop()
{
  m_stop = true;
}


void
TestResult::addListener( TestListener *listener )
{
  m_listeners.push_back( listener );
}


void
TestResult::removeListener ( TestListener *listener )
{
  m_listeners.erase( std::remove( m_listeners.begin(),
                                  m_listeners.end(),
                                  listener ),
                     m_listeners.end());
}


void
TestResult::runTest( Test *test )
{
  startTestRun( test );
  test->run( this );
  endTestRun( test );
}


void
TestResult::startTestRun( Test *test )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->startTestRun( test, this );
}


void
TestResult::endTestRun( Test *test )
{
  for ( TestListeners::iterator it = m_listeners.begin();
        it != m_listeners.end();
        ++it )
    (*it)->endTestRun( test, this );
}


bool
TestResult::protect( const Functor &functor,
                     Test *test,
                     const std::string &shortDescription )
{
  ProtectorContext context( test, this, shortDescription );
  return m_protectorChain->protect( functor, context );
}

} // namespace CppUnit
