// //////////////////////////////////////////////////////////////////////////
// Implementation file Clocker.cpp for the test timing example
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/04/19
// //////////////////////////////////////////////////////////////////////////
#include <cppunit/TestResult.h>
#include <cppunit/TestFactoryRegistry.h>
#include <cppunit/ui/text/TextTestRunner.h>
#include <iostream>
#include <string>
#include "ClockerListener.h"
#include "ClockerModel.h"
#include "ClockerOutputter.h"


int
main( int argc, char* argv[] )
{
  // Retreive test path from command line first argument. Default to "" which resolve
  // to the top level suite.
  std::string testPath = (argc > 1) ? std::string( argv[1] ) : std::string( "" );

  bool text = false;
  if ( argc > 2  &&  std::string("-text") == argv[2] )
    text = true;

  ClockerModel model;
  ClockerListener listener( &model, text );

  CppUnit::TextTestRunner runner( new ClockerOutputter( &model, std::cout ) );
  runner.addTest( CppUnit::TestFactoryRegistry::getRegistry().makeTest() );
  runner.eventManager().addListener( &listener );

  bool wasSuccessful = runner.run( testPath, false, true, false );

  return wasSuccessful ? 0 : 1;
}
