#include <cppunit/Exception.h>
#include <cppunit/Test.h>
#include <cppunit/TestFailure.h>
#include <cppunit/TestResultCollector.h>
#include <cppunit/XmlOutputter.h>
#include <sstream>


namespace CppUnit {


XmlOutputter::XmlOutputter( TestResultCollector *result,
                            OStream &stream,
                            std::string encoding )
  : m_result( result )
  , m_stream( stream )
  , m_encoding( encoding )
  , m_standalone( true )
{
}


XmlOutputter::~XmlOutputter()
{
}


void
XmlOutputter::write()
{
  m_stream << "<?xml version=\"1.0\" encoding='" << m_encoding << "'";
  if ( m_standalone )
    m_stream << " standalone='yes'";
  m_stream << " ?>\n";
  if ( !m_styleSheet.empty() )
    m_stream << "<?xml-stylesheet type=\"text/xsl\" href=\"" << m_styleSheet << "\"?>\n";
  m_stream << "<TestRun>\n";
  m_stream << failedTestsElement();
  m_stream << successfulTestsElement();
  m_stream << statisticsElement();
  m_stream << "</TestRun>\n";
}


void
XmlOutputter::setStyleSheet( const std::string &styleSheet )
{
  m_styleSheet = styleSheet;
}


void
XmlOutputter::setStandalone( bool standalone )
{
  m_standalone = standalone;
}


std::string
XmlOutputter::failedTestsElement()
{
  std::ostringstream element;
  element << "  <FailedTests>\n";
  const TestResultCollector::TestFailures &failures = m_result->failures();
  for ( int index = 0; index < m_result->testFailuresTotal(); ++index )
  {
    TestFailure *failure = failures[ index ];
    element << "    <FailedTest id=\"" << index + 1 << "\">\n";
    element << "      <Name>" << failure->failedTestName() << "</Name>\n";
    element << "      <FailureType>" << ( failure->isError() ? "Error" : "Assertion" )
            << "</FailureType>\n";
    element << "    </FailedTest>\n";
  }
  element << "  </FailedTests>\n";
  return element.str();
}


std::string
XmlOutputter::successfulTestsElement()
{
  std::ostringstream element;
  element << "  <SuccessfulTests>\n";
  const TestResultCollector::Tests &tests = m_result->tests();
  for ( unsigned int index = 0; index < tests.size(); ++index )
    element << testElement( tests[ index ], index + 1 );
  element << "  </SuccessfulTests>\n";
  return element.str();
}


std::string
XmlOutputter::testElement( Test *test, int testNumber )
{
  std::ostringstream element;
  element << "    <Test id=\"" << testNumber << "\">\n";
  element << "      <Name>" << test->getName() << "</Name>\n";
  element << "    </Test>\n";
  return element.str();
}


std::string
XmlOutputter::statisticsElement()
{
  std::ostringstream element;
  element << "  <Statistics>\n";
  element << "    <Tests>" << m_result->runTests() << "</Tests>\n";
  element << "    <FailuresTotal>" << m_result->testFailuresTotal() << "</FailuresTotal>\n";
  element << "    <Errors>" << m_result->testErrors() << "</Errors>\n";
  element << "    <Failures>" << m_result->testFailures() << "</Failures>\n";
  element << "  </Statistics>\n";
  return element.str();
}


} // namespace CppUnit
