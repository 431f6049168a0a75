from consola.comandos import ComandoConsola


class Command(ComandoConsola):
    help = "Idempotente euleriano de un hipergrafo"
    comando = 'eulerian'
