#include <cppunit/Exception.h>
#include <cppunit/DefaultProtector.h>


namespace CppUnit {


bool
DefaultProtector::protect( const Functor &functor,
                           const ProtectorContext &context )
{
  try
  {
    return functor();
  }
  catch ( Exception &failure )
  {
    reportFailure( context, failure );
  }
  catch ( std::exception &e )
  {
    std::string shortDescription( "uncaught exception of type " );
    shortDescription += "std::exception";
    reportError( context,
                 Message( shortDescription,
                          e.what() ) );
  }
  catch ( ... )
  {
    reportError( context,
                 Message( "uncaught exception of unknown type") );
  }

  return false;
}

} // namespace CppUnit
