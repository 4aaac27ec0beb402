from khovanizer.main import run

run()
