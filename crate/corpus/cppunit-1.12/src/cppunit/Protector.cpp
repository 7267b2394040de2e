#include <cppunit/Exception.h>
#include <cppunit/Message.h>
#include <cppunit/Protector.h>
#include <cppunit/ProtectorContext.h>
#include <cppunit/TestResult.h>


namespace CppUnit {

Functor::~Functor()
{
}


Protector::~Protector()
{
}


void
Protector::reportError( const ProtectorContext &context,
                        const Exception &error ) const
{
  Exception *actualError = error.clone();
  actualError->setMessage( actualMessage( actualError->message(), context ) );
  context.m_result->addError( context.m_test, actualError );
}



void
Protector::reportError( const ProtectorContext &context,
                        const Message &message,
                        const SourceLine &sourceLine ) const
{
  reportError( context, Exception( message, sourceLine ) );
}


void
Protector::reportFailure( const ProtectorContext &context,
                          const Exception &failure ) const
{
  Exception *actualFailure = failure.clone();
  actualFailure->setMessage( actualMessage( actualFailure->message(), context ) );
  context.m_result->addFailure( context.m_test, actualFailure );
}


Message
Protector::actualMessage( const Message &message,
                          const ProtectorContext &context ) const
{
  Message theActualMessage;
  if ( context.m_shortDescription.empty() )
    theActualMessage = message;
  else
  {
    theActualMessage = Message( context.m_shortDescription,
                                message.shortDescription() );
    theActualMessage.addDetail( message );
  }

  return theActualMessage;
}


} // namespace CppUnit
